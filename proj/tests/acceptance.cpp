// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>

#include "crisp_check.hpp"
#include "oracles.hpp"
#include "tensalg/error.hpp"
#include "tensalg/generator.hpp"
#include "tensalg/paper_example.hpp"
#include "tensalg/workspace.hpp"

using namespace tensalg;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int n, const std::string& title, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", n, title.c_str(), o.detail.c_str(), s);
  std::fflush(stdout);
}

std::string first_failure(const CheckReport& rep, const std::function<bool(const std::string&)>& keep) {
  for (const auto& c : rep.checks)
    if (keep(c.name) && !c.pass) return c.name + " on " + c.instance + ": " + c.witness;
  return "";
}

std::pair<std::size_t, std::size_t> tally(const CheckReport& rep, const std::function<bool(const std::string&)>& keep) {
  std::size_t total = 0, bad = 0;
  for (const auto& c : rep.checks)
    if (keep(c.name)) {
      ++total;
      if (!c.pass) ++bad;
    }
  return {total, bad};
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::vector<int> indices(const std::vector<ModuleHom>& homs, std::size_t i) {
  std::vector<int> out;
  for (const auto& y : homs[i].values) out.push_back(y[0]);
  return out;
}

}  // namespace

int main() {
  criterion(1, "diamond example reproduction", [] {
    const auto t0 = std::chrono::steady_clock::now();
    auto res = run_paper_example();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    using Rows = std::vector<std::vector<std::string>>;
    const Rows homs{{"0", "0", "0", "0", "0"}, {"0", "0", "1", "1", "1"}, {"0", "1", "1", "1", "1"}};
    const Rows r{{"1", "0", "0"}, {"1", "0", "0"}, {"1", "1", "0"}};
    const Rows mu{{"0", "0", "0"}, {"0", "0", "1"}, {"0", "1", "1"}, {"0", "1", "1"}, {"0", "1", "1"}};
    std::string bad;
    if (res.carrier != std::vector<std::string>{"0", "a", "b", "c", "1"}) bad += " carrier order;";
    if (res.homs != homs) bad += " hom tables;";
    if (res.hom_names != std::vector<std::string>{"f1", "f7", "f8"}) bad += " hom names;";
    if (res.r != r) bad += " r table;";
    if (res.mu != mu) bad += " mu table;";
    if (!res.lax) bad += " mu not lax;";
    if (res.injective) bad += " mu injective;";
    if (s >= 1.0) bad += " slower than 1 s;";
    std::ostringstream d;
    d << std::fixed << std::setprecision(3) << "homs {f1,f7,f8}, r and mu tables exact, lax=yes, injective=no, strict=" << (res.strict ? "yes" : "no")
      << " (informational), " << s << " s";
    if (!bad.empty()) return Outcome{false, "mismatch:" + bad};
    return Outcome{true, d.str()};
  });

  criterion(2, "quantale facts for the example tables", [] {
    auto V = parse_workspace(paper_example_json()).quantale("V");
    std::string v = V->commutative() ? "3-chain V accepted, commutative=true" : "3-chain V reported non-commutative";
    std::string m3;
    bool m3_ok = false;
    try {
      auto M3 = parse_workspace(m3_printed_json()).quantale("M3");
      m3_ok = !M3->commutative();
      m3 = std::string("M3 accepted, commutative=") + (M3->commutative() ? "true" : "false");
    } catch (const AlgebraError& e) {
      m3 = std::string("M3 table as printed rejected (") + e.what() + ")";
    }
    return Outcome{V->commutative() && m3_ok, v + "; " + m3};
  });

  criterion(3, "hom enumeration against the all-functions oracle", [] {
    InstanceGenerator gen(101);
    std::size_t instances = 0, pairs = 0, homs = 0;
    for (std::size_t k = 0; k < 60; ++k) {
      Instance in = gen.draw(k, 0);
      auto A1 = std::dynamic_pointer_cast<const TableModule>(in.H1->module());
      auto A2 = std::dynamic_pointer_cast<const TableModule>(in.H2->module());
      auto L1 = std::dynamic_pointer_cast<const TableModule>(in.L1);
      for (const auto& [A, L] : {std::pair{A1, L1}, std::pair{A1, A2}, std::pair{L1, A1}}) {
        double space = 1;
        for (std::size_t i = 0; i < A->size(); ++i) space *= static_cast<double>(L->size());
        if (space > 1e5) continue;
        auto got = enumerate_module_homs(A, L);
        std::vector<std::vector<int>> tables;
        for (std::size_t i = 0; i < got.size(); ++i) tables.push_back(indices(got, i));
        std::sort(tables.begin(), tables.end());
        auto want = oracle::all_function_homs(oracle::raw(*A), oracle::raw(*L));
        if (tables != want)
          return Outcome{false, "instance " + in.describe() + " " + A->name() + "->" + L->name() + ": library " +
                                    std::to_string(tables.size()) + " homs, oracle " + std::to_string(want.size())};
        ++pairs;
        homs += want.size();
      }
      ++instances;
    }
    return Outcome{instances >= 50, std::to_string(instances) + " instances, " + std::to_string(pairs) +
                                        " module pairs, " + std::to_string(homs) + " homs, exact set equality"};
  });

  criterion(4, "nucleus closure by iteration against meets of fixed points", [] {
    InstanceGenerator gen(202);
    std::size_t count = 0;
    for (std::size_t k = 0; k < 60; ++k) {
      Instance in = gen.draw(k, 0);
      std::mt19937_64 rng(1000 + k);
      for (const FslPtr& H : {in.H1, FslPtr(construct_FJ(in.H1->module(), in.J1))}) {
        const auto& M = *H->module();
        const auto& C = M.carrier().elems;
        std::uniform_int_distribution<std::size_t> pick(0, C.size() - 1);
        PairSet X;
        for (int m = 1 + static_cast<int>(k % 2); m > 0; --m) X.emplace_back(C[pick(rng)], C[pick(rng)]);
        auto j = prenucleus_from_pairs(H, X);
        if (!is_prenucleus(j)) return Outcome{false, "generated operator is not a prenucleus on " + in.describe()};
        auto it = closure_by_iteration(j);
        auto mt = closure_by_meets(j);
        auto ref = oracle::least_fixed_above(
            j.values, [&](std::size_t a, std::size_t b) { return M.leq(C[a], C[b]); });
        if (it.values != mt.values) return Outcome{false, "iteration and meets differ on " + in.describe()};
        if (it.values != ref) return Outcome{false, "closure differs from the scan oracle on " + in.describe()};
        auto n = closure_of(j);
        if (auto w = nucleus_violation(n)) return Outcome{false, "closure_of not a nucleus: " + *w};
        ++count;
      }
    }
    return Outcome{count >= 100, std::to_string(count) +
                                     " prenuclei (hosts H and A^J), both routes and the scan oracle agree, "
                                     "every closure passes is_nucleus"};
  });

  SuiteOptions opt;  // seed 7, 100 instances
  const auto t0 = std::chrono::steady_clock::now();
  CheckReport adj = run_adjunction_suite(opt);
  const double adj_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  auto is_triangle = [](const std::string& n) { return n.find(".triangle.") != std::string::npos; };
  auto is_nat = [](const std::string& n) { return starts_with(n, "naturality."); };
  auto is_law = [](const std::string& n) { return starts_with(n, "law."); };
  auto is_instance = [](const std::string& n) { return n == "instance"; };
  auto [inst_total, inst_bad] = tally(adj, is_instance);
  const std::string suite_note = std::to_string(opt.count) + " instances (seed " + std::to_string(opt.seed) + ", " +
                                 std::to_string(adj.rejections) + " oversized draws redrawn)";

  criterion(5, "adjunction triangle identities", [&] {
    auto [total, bad] = tally(adj, is_triangle);
    std::ostringstream d;
    d << std::fixed << std::setprecision(2) << total << " checks over " << suite_note << ", " << bad << " failures, full adjunction suite " << adj_s << " s";
    if (inst_bad) return Outcome{false, first_failure(adj, is_instance)};
    if (bad) return Outcome{false, d.str() + "; " + first_failure(adj, is_triangle)};
    return Outcome{total == 6 * opt.count && adj_s < 30.0, d.str()};
  });

  criterion(6, "naturality squares", [&] {
    auto [total, bad] = tally(adj, is_nat);
    std::ostringstream d;
    d << total << " squares over " << suite_note << ", " << bad << " failures";
    if (bad) return Outcome{false, d.str() + "; " + first_failure(adj, is_nat)};
    return Outcome{total == 6 * opt.count && inst_bad == 0, d.str()};
  });

  criterion(7, "crisp degeneration against the Boolean-relation reference", [] {
    auto V = two_quantale();
    InstanceGenerator gen(303);
    std::mt19937_64 rng(303);
    auto ms = curated_modules(V);
    std::uniform_int_distribution<std::size_t> mp(0, ms.size() - 1), np(1, 3);
    std::size_t count = 0;
    for (int k = 0; k < 24; ++k) {
      auto A = ms[mp(rng)];
      auto L = ms[mp(rng)];
      auto J = gen.random_frame(rng, V, np(rng), "J");
      auto H = gen.random_fsl(rng, A, "H");
      const std::string where = "instance " + std::to_string(k) + ": ";
      if (auto w = crisp::FJ_mismatch(A, J)) return Outcome{false, where + *w};
      if (auto w = crisp::tensor_mismatch(H, *A, J)) return Outcome{false, where + *w};
      if (auto w = crisp::hom_frame_mismatch(H, *A, L)) return Outcome{false, where + *w};
      ++count;
    }
    return Outcome{count >= 20, std::to_string(count) + " instances over 2, F^J, tensor and hom frame identical"};
  });

  criterion(8, "class validators on constructed objects", [&] {
    SuiteOptions o = opt;
    CheckReport laws = run_laws_suite(o);
    CheckReport nuclei = run_nuclei_suite(o);
    auto all = [](const std::string&) { return true; };
    auto [a_total, a_bad] = tally(adj, is_law);
    auto [l_total, l_bad] = tally(laws, all);
    auto [n_total, n_bad] = tally(nuclei, all);
    std::ostringstream d;
    d << a_total << " component validations in the adjunction suite, " << l_total << " law/construction checks, "
      << n_total << " nucleus/quotient checks, " << (a_bad + l_bad + n_bad) << " failures";
    if (a_bad) return Outcome{false, d.str() + "; " + first_failure(adj, is_law)};
    if (l_bad) return Outcome{false, d.str() + "; " + first_failure(laws, all)};
    if (n_bad) return Outcome{false, d.str() + "; " + first_failure(nuclei, all)};
    return Outcome{inst_bad == 0, d.str()};
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace tensalg;

namespace {

FslPtr example_H() { return fx::example().fsl("H").fsl; }

FslPtr example_power() {
  const auto& ws = fx::example();
  return construct_FJ(ws.module("A"), fx::frame_of(ws.quantale("V"), {{1, 2}, {0, 1}}));
}

std::vector<EndoOperator> random_prenuclei(FslPtr H, std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  const auto& C = H->module()->carrier().elems;
  std::uniform_int_distribution<std::size_t> pick(0, C.size() - 1);
  std::vector<EndoOperator> out;
  for (int k = 0; k < count; ++k) {
    PairSet X;
    for (int m = 1 + k % 2; m > 0; --m) X.emplace_back(C[pick(rng)], C[pick(rng)]);
    out.push_back(prenucleus_from_pairs(H, X));
  }
  return out;
}

}  // namespace

TEST_SUITE("nucleus") {
  TEST_CASE("identity and constant top") {
    for (const auto& H : {example_H(), example_power()}) {
      auto id = identity_operator(H);
      auto top = constant_top_operator(H);
      CHECK(is_prenucleus(id));
      CHECK(is_nucleus(id));
      CHECK(is_nucleus(top));
      CHECK(closure_of(id) == id);
      CHECK(quotient(id).fsl->module()->carrier().size() == H->module()->carrier().size());
      CHECK(quotient(top).fsl->module()->carrier().size() == 1);
      auto cid = congruence_from_nucleus(id);
      CHECK(std::set<std::size_t>(cid.class_of.begin(), cid.class_of.end()).size() == cid.class_of.size());
      CHECK(nucleus_from_congruence(cid) == id);
      auto ctop = congruence_from_nucleus(top);
      CHECK(std::set<std::size_t>(ctop.class_of.begin(), ctop.class_of.end()).size() == 1);
      CHECK(nucleus_from_congruence(ctop) == top);
    }
  }

  TEST_CASE("a deflationary map is not a prenucleus") {
    auto H = example_H();
    const auto& M = *H->module();
    auto j = make_operator(H, [&](const Elem&) { return M.bottom(); });
    auto w = prenucleus_violation(j);
    REQUIRE(w.has_value());
  }

  TEST_CASE("pair-generated prenuclei") {
    auto H = example_H();
    const auto& M = *H->module();
    CHECK(prenucleus_from_pairs(H, {}) == identity_operator(H));
    CHECK(prenucleus_from_pairs(H, {{M.top(), M.bottom()}}) == constant_top_operator(H));
    for (const auto& j : random_prenuclei(example_power(), 5, 20)) CHECK(is_prenucleus(j));
  }

  TEST_CASE("a prenucleus that is not idempotent") {
    bool seen = false;
    for (const auto& j : random_prenuclei(example_power(), 9, 60)) {
      if (is_nucleus(j)) continue;
      seen = true;
      CHECK(is_prenucleus(j));
      CHECK(nucleus_violation(j).has_value());
      auto n = closure_of(j);
      CHECK(is_nucleus(n));
      CHECK_FALSE(n == j);
    }
    CHECK(seen);
  }

  TEST_CASE("closure routes agree with the least fixed point above") {
    for (const auto& H : {example_H(), example_power()}) {
      const auto& M = *H->module();
      const auto& C = M.carrier().elems;
      auto le = [&](std::size_t a, std::size_t b) { return M.leq(C[a], C[b]); };
      for (const auto& j : random_prenuclei(H, 21, 25)) {
        auto a = closure_by_iteration(j);
        auto b = closure_by_meets(j);
        CHECK(a == b);
        CHECK(a.values == oracle::least_fixed_above(j.values, le));
        CHECK(is_nucleus(a));
        CHECK(closure_of(a) == a);
      }
    }
  }

  TEST_CASE("quotients and congruences") {
    auto H = example_power();
    for (const auto& j : random_prenuclei(H, 33, 15)) {
      auto n = closure_of(j);
      auto q = quotient(n);
      CHECK(module_law_violation(*q.fsl->module()) == fx::ok());
      CHECK(fsemilattice_violation(*q.fsl) == fx::ok());
      CHECK(is_f_hom(q.surjection));
      auto c = congruence_from_nucleus(n);
      CHECK(congruence_violation(c) == fx::ok());
      CHECK(nucleus_from_congruence(c) == n);
    }
  }

  TEST_CASE("factorization through a pair quotient") {
    auto H = example_H();
    const auto& C = H->module()->carrier().elems;
    auto id = identity_fsl_map(H);
    auto f0 = factor_through(id, {});
    for (const auto& x : C) CHECK(f0.gbar(x) == x);

    auto zero = FslMap{H, H, [H](const Elem&) { return H->module()->bottom(); }};
    PairSet X{{C[1], C[3]}};
    auto fz = factor_through(zero, X);
    for (const auto& x : fz.quotient.fsl->module()->carrier().elems) CHECK(fz.gbar(x) == H->module()->bottom());

    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::size_t> pick(0, C.size() - 1);
    for (int k = 0; k < 20; ++k) {
      PairSet Xk{{C[pick(rng)], C[pick(rng)]}};
      PairSet Yk = Xk;
      Yk.emplace_back(C[pick(rng)], C[pick(rng)]);
      auto coarse = quotient(closure_of(prenucleus_from_pairs(H, Yk)));
      auto fac = factor_through(coarse.surjection, Xk);
      for (const auto& x : C) CHECK(fac.gbar(fac.nucleus(x)) == coarse.surjection(x));
      CHECK(is_lax_morphism(fac.gbar));
    }
  }

  TEST_CASE("a map that does not respect X is refused") {
    auto H = example_H();
    const auto& M = *H->module();
    PairSet X{{M.top(), M.bottom()}};
    CHECK(fx::kind_of([&] { factor_through(identity_fsl_map(H), X); }) == ErrorKind::GDoesNotRespectX);
  }
}

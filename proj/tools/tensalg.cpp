// tensalg: command-line front end over JSON workspaces.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tensalg/adjunctions.hpp"
#include "tensalg/error.hpp"
#include "tensalg/functors.hpp"
#include "tensalg/generator.hpp"
#include "tensalg/paper_example.hpp"
#include "tensalg/workspace.hpp"

using namespace tensalg;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
  std::string workspace;
  std::uint64_t seed = 7;
  std::size_t count = 100;
  std::size_t threads = 0;
  std::size_t budget = SuiteOptions{}.budget;
  std::optional<std::size_t> max_carrier;
  std::string out;
  bool quiet = false;
};

using Table = std::vector<std::vector<std::string>>;

void print_table(const std::string& title, const std::vector<std::string>& head, const Table& rows) {
  std::vector<std::size_t> w(head.size(), 0);
  auto widen = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
  };
  widen(head);
  for (const auto& r : rows) widen(r);
  auto line = [&](const std::vector<std::string>& r) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::string cell = i < r.size() ? r[i] : "";
      s += (i ? "  " : "") + cell + std::string(w[i] - cell.size(), ' ');
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    std::cout << s << "\n";
  };
  if (!title.empty()) std::cout << title << "\n";
  line(head);
  std::size_t total = 0;
  for (auto x : w) total += x;
  std::cout << std::string(total + 2 * (w.empty() ? 0 : w.size() - 1), '-') << "\n";
  for (const auto& r : rows) line(r);
  std::cout << "\n";
}

Workspace load(const Options& o) {
  if (o.workspace.empty()) fail(ErrorKind::ParseError, "no --workspace given");
  return load_workspace(o.workspace);
}

void write_out(const Options& o, const ojson& doc) {
  if (o.out.empty()) return;
  std::ofstream f(o.out);
  if (!f) fail(ErrorKind::ParseError, "cannot write " + o.out);
  f << doc.dump(2) << "\n";
}

// A fresh workspace holding q plus whatever the command built, in file format.
ojson workspace_doc(const QuantalePtr& q) {
  Workspace ws;
  ws.add_quantale(q);
  return to_json(ws);
}

ojson module_json(const TableModulePtr& m, const std::string& qname) {
  Workspace tmp;
  tmp.add_quantale(m->quantale_ptr());
  tmp.add_module(m, qname);
  return to_json(tmp)["modules"][0];
}

ojson frame_json(const FramePtr& f) {
  Workspace tmp;
  tmp.add_quantale(f->quantale_ptr());
  tmp.add_frame(f);
  return to_json(tmp)["frames"][0];
}

std::vector<std::string> labels_of(const Module& M) {
  std::vector<std::string> out;
  for (const auto& x : M.carrier().elems) out.push_back(M.format(x));
  return out;
}

ModulePtr module_or_fsl_module(const Workspace& ws, const std::string& name) {
  for (const auto& e : ws.fsls())
    if (e.name == name) return e.fsl->module();
  return ws.module(name);
}

// ---- commands ----

int cmd_validate(const Options& o) {
  Workspace ws = load(o);
  ojson objs = ojson::array();
  Table rows;
  for (const auto& q : ws.quantales()) {
    rows.push_back({"quantale", q->name(), std::to_string(q->size()), q->commutative() ? "commutative" : "not commutative"});
    objs.push_back({{"kind", "quantale"}, {"name", q->name()}, {"size", q->size()}, {"commutative", q->commutative()}});
  }
  for (const auto& [m, qn] : ws.modules()) {
    rows.push_back({"module", m->name(), std::to_string(m->carrier().size()), "over " + qn});
    objs.push_back({{"kind", "module"}, {"name", m->name()}, {"size", m->carrier().size()}, {"quantale", qn}});
  }
  for (const auto& f : ws.frames()) {
    rows.push_back({"frame", f->name(), std::to_string(f->size()), "over " + f->quantale().name()});
    objs.push_back({{"kind", "frame"}, {"name", f->name()}, {"size", f->size()}, {"quantale", f->quantale().name()}});
  }
  for (const auto& e : ws.fsls()) {
    rows.push_back({"fsemilattice", e.name, std::to_string(e.fsl->module()->carrier().size()), "on " + e.module});
    objs.push_back({{"kind", "fsemilattice"}, {"name", e.name}, {"module", e.module}});
  }
  if (!o.quiet) print_table("all objects valid", {"kind", "name", "size", ""}, rows);
  write_out(o, to_json(ws));
  std::cout << ojson{{"command", "validate"}, {"ok", true}, {"objects", objs}}.dump(2) << "\n";
  return 0;
}

int cmd_homs(const Options& o, const std::string& from, const std::string& to) {
  Workspace ws = load(o);
  ModulePtr A = module_or_fsl_module(ws, from);
  ModulePtr L = module_or_fsl_module(ws, to);
  auto homs = enumerate_module_homs(A, L);
  auto head = labels_of(*A);
  head.insert(head.begin(), "#");
  Table rows;
  ojson list = ojson::array();
  for (std::size_t k = 0; k < homs.size(); ++k) {
    std::vector<std::string> row{std::to_string(k + 1)};
    ojson vals = ojson::array();
    for (const auto& y : homs[k].values) {
      row.push_back(L->format(y));
      vals.push_back(L->format(y));
    }
    rows.push_back(row);
    list.push_back(vals);
  }
  if (!o.quiet) print_table(std::to_string(homs.size()) + " module homomorphisms " + from + " -> " + to, head, rows);
  ojson res{{"command", "homs"}, {"ok", true}, {"from", from}, {"to", to}, {"domain", labels_of(*A)}, {"count", homs.size()},
            {"homs", list}};
  write_out(o, res);
  std::cout << res.dump(2) << "\n";
  return 0;
}

int cmd_hom_frame(const Options& o, const std::string& fsl, const std::string& module) {
  Workspace ws = load(o);
  const FslEntry& H = ws.fsl(fsl);
  ModulePtr L = ws.module(module);
  auto HF = hom_frame(H.fsl, L);
  const VFrame& J = *HF->frame();
  const Quantale& Q = J.quantale();
  std::vector<std::string> head{"r"};
  for (const auto& p : J.points()) head.push_back(p);
  Table rows;
  for (std::size_t a = 0; a < J.size(); ++a) {
    std::vector<std::string> row{J.points()[a]};
    for (std::size_t b = 0; b < J.size(); ++b) row.push_back(Q.label(J.r(a, b)));
    rows.push_back(row);
  }
  if (!o.quiet) {
    std::cout << "points: homomorphisms " << H.module << " -> " << module << " as value lists over ("
              << [&] {
                   std::string s;
                   for (const auto& l : labels_of(*H.fsl->module())) s += (s.empty() ? "" : ",") + l;
                   return s;
                 }()
              << ")\n\n";
    print_table("J[" + fsl + "," + module + "], row = first argument", head, rows);
  }
  ojson doc = workspace_doc(J.quantale_ptr());
  auto named = std::make_shared<VFrame>(J.quantale_ptr(), J.points(), J.table(), "J[" + fsl + "," + module + "]");
  doc["frames"].push_back(frame_json(named));
  write_out(o, doc);
  std::cout << ojson{{"command", "hom-frame"}, {"ok", true}, {"points", J.size()}, {"frame", frame_json(named)}}.dump(2)
            << "\n";
  return 0;
}

int cmd_tensor(const Options& o, const std::string& frame, const std::string& fsl) {
  Workspace ws = load(o);
  auto T = tensor(ws.frame(frame), ws.fsl(fsl).fsl);
  const Module& M = *T->module();
  const std::string name = frame + "(x)" + fsl;
  auto tm = export_module(M, name);
  const Quantale& Q = M.quantale();
  std::vector<std::string> head{"element"};
  for (std::size_t v = 0; v < Q.size(); ++v) head.push_back(Q.label(static_cast<int>(v)) + "*");
  Table rows;
  for (int x = 0; x < static_cast<int>(tm->lattice().size()); ++x) {
    std::vector<std::string> row{tm->lattice().label(x)};
    for (std::size_t v = 0; v < Q.size(); ++v) row.push_back(tm->lattice().label(tm->act_index(static_cast<int>(v), x)));
    rows.push_back(row);
  }
  if (!o.quiet)
    print_table(name + ": " + std::to_string(tm->lattice().size()) + " fixed points of the tensor nucleus in " +
                    T->power()->name(),
                head, rows);
  const std::string qn = Q.name();
  ojson doc = workspace_doc(M.quantale_ptr());
  doc["modules"].push_back(module_json(tm, qn));
  write_out(o, doc);
  std::cout << ojson{{"command", "tensor"}, {"ok", true}, {"size", tm->lattice().size()}, {"module", module_json(tm, qn)}}
                   .dump(2)
            << "\n";
  return 0;
}

int cmd_fj(const Options& o, const std::string& module, const std::string& frame) {
  Workspace ws = load(o);
  auto P = construct_FJ(module_or_fsl_module(ws, module), ws.frame(frame));
  const Module& M = *P->module();
  const std::string mname = module + "^" + frame;
  auto tm = export_module(M, mname);
  FslEntry e = export_fsl(*P, mname + ".F", mname);
  Table rows;
  for (int x = 0; x < static_cast<int>(tm->lattice().size()); ++x)
    rows.push_back({tm->lattice().label(x), tm->lattice().label(e.F[static_cast<std::size_t>(x)])});
  if (!o.quiet) print_table(mname + " with F^" + frame, {"x", "F(x)"}, rows);
  const std::string qn = M.quantale().name();
  Workspace out;
  out.add_quantale(M.quantale_ptr());
  out.add_module(tm, qn);
  e.fsl = validate_fsemilattice(tm, e.F, e.name);
  out.add_fsl(e);
  ojson doc = to_json(out);
  write_out(o, doc);
  std::cout << ojson{{"command", "fj"}, {"ok", true}, {"size", tm->lattice().size()}, {"module", doc["modules"][0]},
                     {"fsemilattice", doc["fsemilattices"][0]}}
                   .dump(2)
            << "\n";
  return 0;
}

int cmd_check(const Options& o, const std::string& suite) {
  SuiteOptions so;
  so.seed = o.seed;
  so.count = o.count;
  so.threads = o.threads;
  so.budget = o.budget;
  auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.seed = o.seed;
  if (suite == "laws" || suite == "all") rep.merge(run_laws_suite(so));
  if (suite == "adjunctions" || suite == "all") rep.merge(run_adjunction_suite(so));
  if (suite == "nuclei" || suite == "all") rep.merge(run_nuclei_suite(so));
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::map<std::string, std::pair<std::size_t, std::size_t>> by_name;
  for (const auto& c : rep.checks) (c.pass ? by_name[c.name].first : by_name[c.name].second)++;
  Table rows;
  ojson per = ojson::array();
  for (const auto& [name, pf] : by_name) {
    rows.push_back({name, std::to_string(pf.first), std::to_string(pf.second)});
    per.push_back({{"name", name}, {"passed", pf.first}, {"failed", pf.second}});
  }
  ojson failures = ojson::array();
  Table frows;
  for (const auto& c : rep.checks)
    if (!c.pass) {
      failures.push_back({{"name", c.name}, {"instance", c.instance}, {"witness", c.witness}});
      frows.push_back({c.name, c.instance, c.witness});
    }
  if (!o.quiet) {
    print_table("suite " + suite + ", seed " + std::to_string(o.seed) + ", " + std::to_string(o.count) + " instances",
                {"check", "passed", "failed"}, rows);
    if (!frows.empty()) print_table("failures", {"check", "instance", "witness"}, frows);
    std::cout << rep.passed() << " passed, " << rep.failed() << " failed, " << rep.rejections
              << " draws rejected for size, " << secs << " s\n\n";
  }
  ojson res{{"command", "check"}, {"suite", suite},       {"seed", o.seed},          {"count", o.count},
            {"ok", rep.ok()},     {"passed", rep.passed()}, {"failed", rep.failed()}, {"rejections", rep.rejections},
            {"seconds", secs},    {"checks", per},          {"failures", failures}};
  write_out(o, res);
  std::cout << res.dump(2) << "\n";
  return rep.ok() ? 0 : 1;
}

int cmd_paper_example(const Options& o) {
  PaperExampleResult r = o.workspace.empty() ? run_paper_example() : run_paper_example(load(o));
  const std::vector<std::string>& names = r.hom_names;
  if (!o.quiet) {
    std::vector<std::string> head{"hom"};
    head.insert(head.end(), r.carrier.begin(), r.carrier.end());
    Table rows;
    for (std::size_t k = 0; k < r.homs.size(); ++k) {
      std::vector<std::string> row{names[k]};
      row.insert(row.end(), r.homs[k].begin(), r.homs[k].end());
      rows.push_back(row);
    }
    print_table("module homomorphisms A -> L", head, rows);
    std::vector<std::string> rh{"r"};
    rh.insert(rh.end(), names.begin(), names.end());
    Table rr;
    for (std::size_t a = 0; a < r.r.size(); ++a) {
      std::vector<std::string> row{names[a]};
      row.insert(row.end(), r.r[a].begin(), r.r[a].end());
      rr.push_back(row);
    }
    print_table("r(alpha, beta), row = alpha", rh, rr);
    std::vector<std::string> mh{"x"};
    mh.insert(mh.end(), names.begin(), names.end());
    Table mr;
    for (std::size_t x = 0; x < r.mu.size(); ++x) {
      std::vector<std::string> row{r.carrier[x]};
      row.insert(row.end(), r.mu[x].begin(), r.mu[x].end());
      mr.push_back(row);
    }
    print_table("mu_H(x)(alpha)", mh, mr);
    std::cout << "lax: " << (r.lax ? "yes" : "no") << ", injective: " << (r.injective ? "yes" : "no") << "\n";
    std::cout << "strict: " << (r.strict ? "yes" : "no") << " (F^J o mu_H compared with mu_H o F)\n";
    std::cout << "V commutative: " << (r.v_commutative ? "yes" : "no") << "\n";
    std::cout << "M3 as printed: " << r.m3_status << "\n\n";
    Table cr;
    for (const auto& c : r.checks) cr.push_back({c.name, c.pass ? "ok" : "MISMATCH", c.witness});
    print_table("expected tables", {"check", "result", ""}, cr);
  }
  ojson checks = ojson::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
  ojson res{{"command", "paper-example"}, {"ok", r.ok()},     {"carrier", r.carrier},     {"hom_names", r.hom_names}, {"homs", r.homs},
            {"r", r.r},                   {"mu", r.mu},       {"lax", r.lax},             {"injective", r.injective},
            {"strict", r.strict},         {"v_commutative", r.v_commutative},             {"m3", r.m3_status},
            {"checks", checks}};
  write_out(o, res);
  std::cout << res.dump(2) << "\n";
  return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quantale-valued frames, F-semilattices and their tensor and hom constructions"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--workspace", o.workspace, "JSON workspace file");
  app.add_option("--seed", o.seed, "generator seed for check suites");
  app.add_option("--count", o.count, "instances per check suite");
  app.add_option("--threads", o.threads, "worker threads for check suites (0: all cores)");
  app.add_option("--budget", o.budget, "element cap per suite instance; larger draws are redrawn");
  app.add_option("--max-carrier", o.max_carrier, "cap on base carrier sizes");
  app.add_option("--out", o.out, "write the result (workspace format where applicable) to FILE");
  app.add_flag("--quiet", o.quiet, "print only the JSON result");

  std::string a1, a2, suite = "all";
  auto* validate = app.add_subcommand("validate", "load and validate every object in the workspace");
  auto* homs = app.add_subcommand("homs", "enumerate module homomorphisms FROM -> TO");
  homs->add_option("FROM", a1)->required();
  homs->add_option("TO", a2)->required();
  auto* hf = app.add_subcommand("hom-frame", "the V-frame of homomorphisms from an F-semilattice into a module");
  hf->add_option("FSL", a1)->required();
  hf->add_option("MODULE", a2)->required();
  auto* tn = app.add_subcommand("tensor", "tensor product of a frame and an F-semilattice");
  tn->add_option("FRAME", a1)->required();
  tn->add_option("FSL", a2)->required();
  auto* fj = app.add_subcommand("fj", "power F-semilattice of a module over a frame");
  fj->add_option("MODULE", a1)->required();
  fj->add_option("FRAME", a2)->required();
  auto* check = app.add_subcommand("check", "run randomized check suites");
  check->add_option("--suite", suite, "laws, adjunctions, nuclei or all")
      ->check(CLI::IsMember({"laws", "adjunctions", "nuclei", "all"}));
  auto* paper = app.add_subcommand("paper-example", "reproduce the diamond-lattice example");

  CLI11_PARSE(app, argc, argv);

  try {
    if (o.max_carrier) {
      Limits l = limits();
      l.max_carrier = *o.max_carrier;
      set_limits(l);
    }
    if (*validate) return cmd_validate(o);
    if (*homs) return cmd_homs(o, a1, a2);
    if (*hf) return cmd_hom_frame(o, a1, a2);
    if (*tn) return cmd_tensor(o, a1, a2);
    if (*fj) return cmd_fj(o, a1, a2);
    if (*check) return cmd_check(o, suite);
    if (*paper) return cmd_paper_example(o);
  } catch (const AlgebraError& e) {
    if (!o.quiet) std::cerr << "error: " << e.what() << "\n";
    std::cout << ojson{{"ok", false}, {"error", {{"kind", to_string(e.kind())}, {"witness", e.witness()}}}}.dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    if (!o.quiet) std::cerr << "error: " << e.what() << "\n";
    std::cout << ojson{{"ok", false}, {"error", {{"kind", "Internal"}, {"witness", e.what()}}}}.dump(2) << "\n";
    return 2;
  }
  return 2;
}

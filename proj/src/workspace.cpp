#include "tensalg/workspace.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "tensalg/error.hpp"

namespace tensalg {

using ojson = nlohmann::ordered_json;

void Workspace::claim(const std::string& name) {
  if (std::find(names_.begin(), names_.end(), name) != names_.end())
    fail(ErrorKind::ValidationError, "duplicate name " + name);
  names_.push_back(name);
}

void Workspace::add_quantale(QuantalePtr q) {
  claim(q->name());
  quantales_.push_back(std::move(q));
}

void Workspace::add_module(TableModulePtr m, const std::string& quantale) {
  claim(m->name());
  modules_.emplace_back(std::move(m), quantale);
}

void Workspace::add_frame(FramePtr f) {
  claim(f->name());
  frames_.push_back(std::move(f));
}

void Workspace::add_fsl(FslEntry e) {
  claim(e.name);
  fsls_.push_back(std::move(e));
}

QuantalePtr Workspace::quantale(const std::string& name) const {
  for (const auto& q : quantales_)
    if (q->name() == name) return q;
  fail(ErrorKind::UnknownReference, "quantale " + name);
}

TableModulePtr Workspace::module(const std::string& name) const {
  for (const auto& [m, q] : modules_)
    if (m->name() == name) return m;
  fail(ErrorKind::UnknownReference, "module " + name);
}

FramePtr Workspace::frame(const std::string& name) const {
  for (const auto& f : frames_)
    if (f->name() == name) return f;
  fail(ErrorKind::UnknownReference, "frame " + name);
}

const FslEntry& Workspace::fsl(const std::string& name) const {
  for (const auto& e : fsls_)
    if (e.name == name) return e;
  fail(ErrorKind::UnknownReference, "F-semilattice " + name);
}

namespace {

int lookup(const FinLattice& L, const ojson& label, const std::string& where) {
  if (!label.is_string()) fail(ErrorKind::ParseError, where + ": element labels must be strings");
  auto idx = L.find(label.get<std::string>());
  if (!idx) fail(ErrorKind::UnknownReference, where + ": no element " + label.get<std::string>());
  return *idx;
}

const ojson& field(const ojson& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) fail(ErrorKind::ParseError, where + ": missing field \"" + key + "\"");
  return obj.at(key);
}

FinLattice parse_lattice(const ojson& obj, const std::string& where) {
  auto labels = field(obj, "elements", where).get<std::vector<std::string>>();
  const auto& leqj = field(obj, "leq", where);
  std::vector<std::vector<bool>> leq;
  for (const auto& row : leqj) {
    std::vector<bool> r;
    for (const auto& x : row) r.push_back(x.is_boolean() ? x.get<bool>() : x.get<int>() != 0);
    leq.push_back(std::move(r));
  }
  return validate_lattice(std::move(labels), leq);
}

// Runs a validator, re-raising algebra failures as ValidationError with the witness.
template <class Fn>
auto validated(const std::string& where, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const AlgebraError& e) {
    if (e.kind() == ErrorKind::UnknownReference || e.kind() == ErrorKind::ParseError) throw;
    fail(ErrorKind::ValidationError, where + ": " + e.what());
  }
}

ojson leq_json(const FinLattice& L) {
  ojson rows = ojson::array();
  for (int a = 0; a < static_cast<int>(L.size()); ++a) {
    ojson row = ojson::array();
    for (int b = 0; b < static_cast<int>(L.size()); ++b) row.push_back(L.leq(a, b) ? 1 : 0);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Workspace parse_workspace(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::ParseError, "top level must be an object");
  Workspace ws;
  try {
    for (const auto& q : doc.value("quantales", ojson::array())) {
      const std::string name = field(q, "name", "quantale").get<std::string>();
      const std::string where = "quantale " + name;
      ws.add_quantale(validated(where, [&] {
        FinLattice L = parse_lattice(q, where);
        std::vector<std::vector<int>> t;
        for (const auto& row : field(q, "tensor", where)) {
          std::vector<int> r;
          for (const auto& x : row) r.push_back(lookup(L, x, where));
          t.push_back(std::move(r));
        }
        int unit = lookup(L, field(q, "unit", where), where);
        return validate_quantale(std::move(L), t, unit, name);
      }));
    }
    for (const auto& m : doc.value("modules", ojson::array())) {
      const std::string name = field(m, "name", "module").get<std::string>();
      const std::string where = "module " + name;
      const std::string qname = field(m, "quantale", where).get<std::string>();
      QuantalePtr Q = ws.quantale(qname);
      ws.add_module(validated(where,
                              [&] {
                                FinLattice L = parse_lattice(m, where);
                                const auto& act = field(m, "action", where);
                                std::vector<std::vector<int>> a;
                                for (const auto& row : act) {
                                  std::vector<int> r;
                                  for (const auto& x : row) r.push_back(lookup(L, x, where));
                                  a.push_back(std::move(r));
                                }
                                return validate_module(Q, std::move(L), a, name);
                              }),
                    qname);
    }
    for (const auto& f : doc.value("frames", ojson::array())) {
      const std::string name = field(f, "name", "frame").get<std::string>();
      const std::string where = "frame " + name;
      QuantalePtr Q = ws.quantale(field(f, "quantale", where).get<std::string>());
      ws.add_frame(validated(where, [&] {
        auto pts = field(f, "points", where).get<std::vector<std::string>>();
        std::vector<std::vector<int>> r;
        for (const auto& row : field(f, "r", where)) {
          std::vector<int> rr;
          for (const auto& x : row) rr.push_back(lookup(Q->lattice(), x, where));
          r.push_back(std::move(rr));
        }
        return validate_frame(Q, std::move(pts), r, name);
      }));
    }
    for (const auto& h : doc.value("fsemilattices", ojson::array())) {
      const std::string name = field(h, "name", "fsemilattice").get<std::string>();
      const std::string where = "F-semilattice " + name;
      const std::string mname = field(h, "module", where).get<std::string>();
      TableModulePtr M = ws.module(mname);
      FslEntry e{name, mname, {}, nullptr};
      for (const auto& x : field(h, "F", where)) e.F.push_back(lookup(M->lattice(), x, where));
      e.fsl = validated(where, [&] { return validate_fsemilattice(M, e.F, name); });
      ws.add_fsl(std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  return ws;
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_workspace(ss.str());
}

ojson to_json(const Workspace& ws) {
  ojson doc;
  doc["quantales"] = ojson::array();
  for (const auto& q : ws.quantales()) {
    const FinLattice& L = q->lattice();
    ojson t = ojson::array();
    for (int a = 0; a < static_cast<int>(q->size()); ++a) {
      ojson row = ojson::array();
      for (int b = 0; b < static_cast<int>(q->size()); ++b) row.push_back(L.label(q->mul(a, b)));
      t.push_back(row);
    }
    doc["quantales"].push_back(
        {{"name", q->name()}, {"elements", L.labels()}, {"leq", leq_json(L)}, {"tensor", t}, {"unit", L.label(q->unit())}});
  }
  doc["modules"] = ojson::array();
  for (const auto& [m, qname] : ws.modules()) {
    const FinLattice& L = m->lattice();
    ojson act = ojson::array();
    for (int v = 0; v < static_cast<int>(m->quantale().size()); ++v) {
      ojson row = ojson::array();
      for (int a = 0; a < static_cast<int>(L.size()); ++a) row.push_back(L.label(m->act_index(v, a)));
      act.push_back(row);
    }
    doc["modules"].push_back(
        {{"name", m->name()}, {"quantale", qname}, {"elements", L.labels()}, {"leq", leq_json(L)}, {"action", act}});
  }
  doc["frames"] = ojson::array();
  for (const auto& f : ws.frames()) {
    ojson r = ojson::array();
    for (std::size_t i = 0; i < f->size(); ++i) {
      ojson row = ojson::array();
      for (std::size_t j = 0; j < f->size(); ++j) row.push_back(f->quantale().label(f->r(i, j)));
      r.push_back(row);
    }
    doc["frames"].push_back({{"name", f->name()}, {"quantale", f->quantale().name()}, {"points", f->points()}, {"r", r}});
  }
  doc["fsemilattices"] = ojson::array();
  for (const auto& e : ws.fsls()) {
    const auto M = ws.module(e.module);
    ojson F = ojson::array();
    for (int y : e.F) F.push_back(M->lattice().label(y));
    doc["fsemilattices"].push_back({{"name", e.name}, {"module", e.module}, {"F", F}});
  }
  return doc;
}

TableModulePtr export_module(const Module& M, const std::string& name) { return materialize(M, name); }

FslEntry export_fsl(const FSemilattice& H, const std::string& name, const std::string& module_name) {
  FslEntry e{name, module_name, {}, nullptr};
  const Carrier& C = H.module()->carrier();
  for (const auto& x : C.elems) e.F.push_back(static_cast<int>(C.index_of(H.F(x))));
  return e;
}

}  // namespace tensalg

#include <cstdint>
#include <unordered_map>
#include "tensalg/module.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "tensalg/error.hpp"

namespace tensalg {

namespace detail {
std::vector<std::vector<int>> enumerate_hom_tables(const FinLattice& S, const FinLattice& T, std::size_t nv,
                                                   const std::vector<int>* act_s, const std::vector<int>* act_t);
}

std::size_t ElemHash::operator()(const Elem& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : e) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t Carrier::index_of(const Elem& x) const {
  auto it = index.find(x);
  if (it == index.end()) {
    std::ostringstream os;
    os << "tuple (";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    os << ") is not an element of the carrier";
    fail(ErrorKind::BadElementIndex, os.str());
  }
  return it->second;
}

// ---- Module defaults ----

const Carrier& Module::carrier() const {
  std::lock_guard<std::mutex> lock(mu_);
  if (!carrier_) {
    auto c = std::make_shared<Carrier>();
    c->elems = enumerate();
    c->index.reserve(c->elems.size() * 2);
    for (std::size_t i = 0; i < c->elems.size(); ++i) c->index.emplace(c->elems[i], i);
    carrier_ = std::move(c);
  }
  return *carrier_;
}

std::vector<Elem> Module::enumerate() const {
  const std::size_t cap = limits().max_materialized;
  const auto gens = generators();
  std::unordered_set<Elem, ElemHash> seen;
  std::deque<Elem> queue;
  Elem b = bottom();
  seen.insert(b);
  queue.push_back(b);
  while (!queue.empty()) {
    Elem e = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Elem y = join(e, g);
      if (seen.insert(y).second) {
        check_materialized_size(seen.size(), "carrier of " + name());
        queue.push_back(std::move(y));
      }
    }
  }
  (void)cap;
  std::vector<Elem> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Elem Module::top() const { return join_all(*this, generators()); }

Elem Module::meet(const Elem& a, const Elem& b) const {
  Elem acc = bottom();
  for (const auto& x : carrier().elems)
    if (leq(x, a) && leq(x, b)) acc = join(acc, x);
  return acc;
}

Elem Module::residual(int v, const Elem& m) const {
  Elem acc = bottom();
  for (const auto& x : carrier().elems)
    if (leq(act(v, x), m)) acc = join(acc, x);
  return acc;
}

std::string Module::format(const Elem& a) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

Elem join_all(const Module& M, const std::vector<Elem>& xs) {
  Elem acc = M.bottom();
  for (const auto& x : xs) acc = M.join(acc, x);
  return acc;
}

// ---- TableModule ----

TableModule::TableModule(QuantalePtr q, FinLattice lattice, std::vector<int> action, std::string name)
    : Module(std::move(q)), lattice_(std::move(lattice)), action_(std::move(action)), name_(std::move(name)) {}

std::vector<Elem> TableModule::generators() const {
  std::vector<Elem> out;
  for (int j : join_irreducibles(lattice_)) out.push_back({j});
  return out;
}

std::vector<Elem> TableModule::enumerate() const {
  std::vector<Elem> out;
  for (int i = 0; i < static_cast<int>(lattice_.size()); ++i) out.push_back({i});
  return out;
}

Elem TableModule::residual(int v, const Elem& m) const {
  int acc = lattice_.bottom();
  for (int x = 0; x < static_cast<int>(lattice_.size()); ++x)
    if (lattice_.leq(act_index(v, x), m[0])) acc = lattice_.join(acc, x);
  return {acc};
}

TableModulePtr validate_module(QuantalePtr q, FinLattice carrier, const std::vector<std::vector<int>>& action,
                               std::string name) {
  const Quantale& Q = *q;
  const int nv = static_cast<int>(Q.size());
  const int n = static_cast<int>(carrier.size());
  if (static_cast<int>(action.size()) != nv) fail(ErrorKind::BadElementIndex, "action table needs one row per quantale element");
  std::vector<int> flat(static_cast<std::size_t>(nv) * n);
  for (int v = 0; v < nv; ++v) {
    if (static_cast<int>(action[v].size()) != n) fail(ErrorKind::BadElementIndex, "action row has wrong length");
    for (int a = 0; a < n; ++a) {
      int x = action[v][a];
      if (x < 0 || x >= n) fail(ErrorKind::BadElementIndex, "action entry out of range");
      flat[static_cast<std::size_t>(v) * n + a] = x;
    }
  }
  auto M = std::make_shared<TableModule>(q, std::move(carrier), std::move(flat), std::move(name));
  const FinLattice& A = M->lattice();
  auto la = [&](int a) { return A.label(a); };
  auto lv = [&](int v) { return Q.label(v); };
  for (int v = 0; v < nv; ++v) {
    if (M->act_index(v, A.bottom()) != A.bottom())
      fail(ErrorKind::ActionNotJoinPreserving, lv(v) + " * 0 != 0");
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (M->act_index(v, A.join(a, b)) != A.join(M->act_index(v, a), M->act_index(v, b)))
          fail(ErrorKind::ActionNotJoinPreserving, lv(v) + " * (" + la(a) + " v " + la(b) + ")");
  }
  for (int a = 0; a < n; ++a) {
    if (M->act_index(Q.bottom(), a) != A.bottom())
      fail(ErrorKind::ActionNotJoinPreserving, "0 * " + la(a) + " != 0");
    for (int u = 0; u < nv; ++u)
      for (int w = u + 1; w < nv; ++w)
        if (M->act_index(Q.join(u, w), a) != A.join(M->act_index(u, a), M->act_index(w, a)))
          fail(ErrorKind::ActionNotJoinPreserving, "(" + lv(u) + " v " + lv(w) + ") * " + la(a));
  }
  for (int u = 0; u < nv; ++u)
    for (int v = 0; v < nv; ++v)
      for (int a = 0; a < n; ++a)
        if (M->act_index(u, M->act_index(v, a)) != M->act_index(Q.mul(u, v), a))
          fail(ErrorKind::ActionNotAssociative, "(" + lv(u) + ", " + lv(v) + ", " + la(a) + ")");
  for (int a = 0; a < n; ++a)
    if (M->act_index(Q.unit(), a) != a) fail(ErrorKind::UnitActionFails, "e * " + la(a) + " != " + la(a));
  return M;
}

// ---- PowerModule ----

PowerModule::PowerModule(ModulePtr base, std::size_t count)
    : Module(base->quantale_ptr()), base_(std::move(base)), count_(count), bw_(base_->width()) {}

Elem PowerModule::block(const Elem& x, std::size_t i) const {
  return Elem(x.begin() + static_cast<std::ptrdiff_t>(i * bw_), x.begin() + static_cast<std::ptrdiff_t>((i + 1) * bw_));
}

void PowerModule::set_block(Elem& x, std::size_t i, const Elem& v) const {
  std::copy(v.begin(), v.end(), x.begin() + static_cast<std::ptrdiff_t>(i * bw_));
}

Elem PowerModule::bottom() const {
  Elem out(width());
  Elem b = base_->bottom();
  for (std::size_t i = 0; i < count_; ++i) set_block(out, i, b);
  return out;
}

Elem PowerModule::join(const Elem& a, const Elem& b) const {
  Elem out(width());
  for (std::size_t i = 0; i < count_; ++i) set_block(out, i, base_->join(block(a, i), block(b, i)));
  return out;
}

bool PowerModule::leq(const Elem& a, const Elem& b) const {
  for (std::size_t i = 0; i < count_; ++i)
    if (!base_->leq(block(a, i), block(b, i))) return false;
  return true;
}

Elem PowerModule::act(int v, const Elem& a) const {
  Elem out(width());
  for (std::size_t i = 0; i < count_; ++i) set_block(out, i, base_->act(v, block(a, i)));
  return out;
}

std::vector<Elem> PowerModule::generators() const {
  std::vector<Elem> out;
  const Elem z = bottom();
  for (std::size_t i = 0; i < count_; ++i)
    for (const auto& g : base_->generators()) {
      Elem x = z;
      set_block(x, i, g);
      out.push_back(std::move(x));
    }
  return out;
}

Elem PowerModule::meet(const Elem& a, const Elem& b) const {
  Elem out(width());
  for (std::size_t i = 0; i < count_; ++i) set_block(out, i, base_->meet(block(a, i), block(b, i)));
  return out;
}

Elem PowerModule::residual(int v, const Elem& m) const {
  Elem out(width());
  for (std::size_t i = 0; i < count_; ++i) set_block(out, i, base_->residual(v, block(m, i)));
  return out;
}

std::string PowerModule::format(const Elem& a) const {
  std::string s = "(";
  for (std::size_t i = 0; i < count_; ++i) s += (i ? "," : "") + base_->format(block(a, i));
  return s + ")";
}

std::string PowerModule::name() const { return base_->name() + "^" + std::to_string(count_); }

std::vector<Elem> PowerModule::enumerate() const {
  const auto& base = base_->carrier().elems;
  std::size_t total = 1;
  for (std::size_t i = 0; i < count_; ++i) {
    total *= base.size();
    check_materialized_size(total, "carrier of " + name());
  }
  std::vector<Elem> out;
  out.reserve(total);
  std::vector<std::size_t> digit(count_, 0);
  for (std::size_t k = 0; k < total; ++k) {
    Elem x(width());
    for (std::size_t i = 0; i < count_; ++i) set_block(x, i, base[digit[i]]);
    out.push_back(std::move(x));
    for (std::size_t i = count_; i-- > 0;) {
      if (++digit[i] < base.size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

std::shared_ptr<const PowerModule> lazy_power(ModulePtr A, std::size_t n) {
  return std::make_shared<PowerModule>(std::move(A), n);
}

std::shared_ptr<const PowerModule> power_module(ModulePtr A, std::size_t n) {
  if (n == 0) fail(ErrorKind::BadElementIndex, "power over an empty index set");
  std::size_t total = 1;
  const std::size_t base = A->carrier().size();
  for (std::size_t i = 0; i < n; ++i) {
    total *= base;
    check_materialized_size(total, A->name() + "^" + std::to_string(n));
  }
  auto P = lazy_power(std::move(A), n);
  P->carrier();
  return P;
}

// ---- QuotientModule ----

QuotientModule::QuotientModule(ModulePtr host, Closure closure, std::string name)
    : Module(host->quantale_ptr()), host_(std::move(host)), closure_(std::move(closure)), name_(std::move(name)) {}

std::vector<Elem> QuotientModule::generators() const {
  std::vector<Elem> out;
  for (const auto& g : host_->generators()) out.push_back(closure_(g));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Elem> QuotientModule::enumerate() const { return Module::enumerate(); }

// ---- maps ----

int module_residuate(const Module& M, const Elem& a, const Elem& b) {
  const Quantale& Q = M.quantale();
  int acc = Q.bottom();
  for (int v = 0; v < static_cast<int>(Q.size()); ++v)
    if (M.leq(M.act(v, a), b)) acc = Q.join(acc, v);
  return acc;
}

ModuleMap ModuleHom::as_map() const {
  auto self = std::make_shared<ModuleHom>(*this);
  return ModuleMap{source, target, [self](const Elem& x) { return (*self)(x); }};
}

ModuleHom tabulate(const ModuleMap& f) {
  ModuleHom h{f.source, f.target, {}};
  for (const auto& x : f.source->carrier().elems) h.values.push_back(f(x));
  return h;
}

ModuleMap identity_map(ModulePtr M) {
  return ModuleMap{M, M, [](const Elem& x) { return x; }};
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (f.target != g.source && f.target->name() != g.source->name())
    fail(ErrorKind::CompositionMismatch, f.target->name() + " vs " + g.source->name());
  auto gf = g.fn;
  auto ff = f.fn;
  return ModuleMap{f.source, g.target, [gf, ff](const Elem& x) { return gf(ff(x)); }};
}

void require_same_quantale(const Module& A, const Module& B) {
  if (A.quantale_ptr() != B.quantale_ptr())
    fail(ErrorKind::SourceTargetQuantaleMismatch, A.name() + " over " + A.quantale().name() + ", " + B.name() +
                                                      " over " + B.quantale().name());
}

std::optional<std::string> module_hom_violation(const ModuleMap& f) {
  const Module& A = *f.source;
  const Module& B = *f.target;
  require_same_quantale(A, B);
  if (f(A.bottom()) != B.bottom()) return "f(0) = " + B.format(f(A.bottom())) + " is not bottom";
  const auto gens = A.generators();
  const int nv = static_cast<int>(A.quantale().size());
  for (const auto& x : A.carrier().elems) {
    const Elem fx = f(x);
    for (const auto& g : gens) {
      Elem lhs = f(A.join(x, g));
      Elem rhs = B.join(fx, f(g));
      if (lhs != rhs)
        return "f(" + A.format(x) + " v " + A.format(g) + ") = " + B.format(lhs) + " but f(x) v f(y) = " + B.format(rhs);
    }
    for (int v = 0; v < nv; ++v) {
      Elem lhs = f(A.act(v, x));
      Elem rhs = B.act(v, fx);
      if (lhs != rhs)
        return "f(" + A.quantale().label(v) + " * " + A.format(x) + ") = " + B.format(lhs) + " but " +
               A.quantale().label(v) + " * f(x) = " + B.format(rhs);
    }
  }
  return std::nullopt;
}

bool is_module_hom(const ModuleMap& f) { return !module_hom_violation(f).has_value(); }

std::optional<std::string> maps_differ(const ModuleMap& f, const ModuleMap& g) {
  for (const auto& x : f.source->carrier().elems) {
    Elem a = f(x), b = g(x);
    if (a != b)
      return "at " + f.source->format(x) + ": " + f.target->format(a) + " vs " + g.target->format(b);
  }
  return std::nullopt;
}

std::optional<std::string> module_law_violation(const Module& M) {
  const Quantale& Q = M.quantale();
  const int nv = static_cast<int>(Q.size());
  const Carrier& C = M.carrier();
  const std::size_t n = C.size();
  const auto gens = M.generators();
  const Elem z = M.bottom();
  auto fmt = [&](const Elem& x) { return M.format(x); };
  for (int v = 0; v < nv; ++v)
    if (M.act(v, z) != z) return "A1: " + Q.label(v) + " * 0 != 0";
  if (!C.contains(z)) return "bottom is not in the carrier";
  const std::size_t zi = C.index_of(z);

  // tabulate the action once; everything after this works on indices
  std::vector<std::size_t> act(static_cast<std::size_t>(nv) * n);
  for (std::size_t x = 0; x < n; ++x)
    for (int u = 0; u < nv; ++u) {
      Elem ux = M.act(u, C.elems[x]);
      if (!C.contains(ux)) return "action " + Q.label(u) + " * " + fmt(C.elems[x]) + " leaves the carrier";
      act[static_cast<std::size_t>(u) * n + x] = C.index_of(ux);
    }
  auto A = [&](int u, std::size_t x) { return act[static_cast<std::size_t>(u) * n + x]; };
  std::vector<std::size_t> gi;
  for (const auto& g : gens) {
    if (!C.contains(g)) return "generator " + fmt(g) + " is not in the carrier";
    gi.push_back(C.index_of(g));
  }
  // joins with generators, plus whatever the A1/A2 checks need
  std::unordered_map<std::uint64_t, std::size_t> joins;
  auto J = [&](std::size_t x, std::size_t y) -> std::size_t {
    const std::uint64_t key = (static_cast<std::uint64_t>(x) << 32) | y;
    auto it = joins.find(key);
    if (it != joins.end()) return it->second;
    Elem j = M.join(C.elems[x], C.elems[y]);
    const std::size_t r = C.contains(j) ? C.index_of(j) : n;
    joins.emplace(key, r);
    return r;
  };

  for (std::size_t x = 0; x < n; ++x) {
    const Elem& ex = C.elems[x];
    if (!M.leq(z, ex)) return "bottom not below " + fmt(ex);
    for (std::size_t k = 0; k < gi.size(); ++k) {
      const std::size_t g = gi[k];
      const std::size_t j = J(x, g);
      if (j == n) return "join " + fmt(ex) + " v " + fmt(gens[k]) + " leaves the carrier";
      if (!M.leq(ex, C.elems[j]) || !M.leq(gens[k], C.elems[j]))
        return "join " + fmt(ex) + " v " + fmt(gens[k]) + " is not an upper bound";
      if (J(g, x) != j) return "join not commutative at " + fmt(ex) + ", " + fmt(gens[k]);
      for (int v = 0; v < nv; ++v)
        if (A(v, j) != J(A(v, x), A(v, g))) return "A1: " + Q.label(v) + " * (" + fmt(ex) + " v " + fmt(gens[k]) + ")";
    }
    if (A(Q.bottom(), x) != zi) return "A2: 0 * " + fmt(ex) + " != 0";
    for (int u = 0; u < nv; ++u)
      for (int w = 0; w < nv; ++w) {
        if (A(Q.join(u, w), x) != J(A(u, x), A(w, x))) return "A2: (" + Q.label(u) + " v " + Q.label(w) + ") * " + fmt(ex);
        if (A(u, A(w, x)) != A(Q.mul(u, w), x))
          return "A3: (" + Q.label(u) + ", " + Q.label(w) + ", " + fmt(ex) + ")";
      }
    if (A(Q.unit(), x) != x) return "A4: e * " + fmt(ex) + " != " + fmt(ex);
  }
  return std::nullopt;
}

TableModulePtr materialize(const Module& M, std::string name) {
  const Carrier& C = M.carrier();
  const std::size_t n = C.size();
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& x : C.elems) labels.push_back(M.format(x));
  std::vector<char> leq(n * n, 0);
  std::vector<int> join(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      leq[a * n + b] = M.leq(C.elems[a], C.elems[b]) ? 1 : 0;
      leq[b * n + a] = M.leq(C.elems[b], C.elems[a]) ? 1 : 0;
      int j = static_cast<int>(C.index_of(M.join(C.elems[a], C.elems[b])));
      join[a * n + b] = join[b * n + a] = j;
    }
  const int bottom = static_cast<int>(C.index_of(M.bottom()));
  int top = bottom;
  for (std::size_t a = 0; a < n; ++a) top = join[static_cast<std::size_t>(top) * n + a];
  const std::size_t nv = M.quantale().size();
  std::vector<int> action(nv * n);
  for (std::size_t v = 0; v < nv; ++v)
    for (std::size_t a = 0; a < n; ++a)
      action[v * n + a] = static_cast<int>(C.index_of(M.act(static_cast<int>(v), C.elems[a])));
  auto L = FinLattice::from_tables_unchecked(std::move(labels), std::move(leq), std::move(join), bottom, top);
  return std::make_shared<TableModule>(M.quantale_ptr(), std::move(L), std::move(action),
                                       name.empty() ? M.name() : std::move(name));
}

std::vector<ModuleHom> enumerate_module_homs(ModulePtr A, ModulePtr L) {
  require_same_quantale(*A, *L);
  auto a = materialize(*A);
  auto l = materialize(*L);
  const auto tables = detail::enumerate_hom_tables(a->lattice(), l->lattice(), A->quantale().size(),
                                                   &a->action_table(), &l->action_table());
  const auto& target = L->carrier().elems;
  std::vector<ModuleHom> out;
  out.reserve(tables.size());
  for (const auto& t : tables) {
    ModuleHom h{A, L, {}};
    h.values.reserve(t.size());
    for (int y : t) h.values.push_back(target[static_cast<std::size_t>(y)]);
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace tensalg

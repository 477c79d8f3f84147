#include "tensalg/nucleus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "tensalg/error.hpp"

namespace tensalg {

EndoOperator make_operator(FslPtr H, const std::function<Elem(const Elem&)>& fn) {
  const Carrier& C = H->module()->carrier();
  EndoOperator j{H, {}};
  j.values.reserve(C.size());
  for (const auto& x : C.elems) j.values.push_back(C.index_of(fn(x)));
  return j;
}

EndoOperator identity_operator(FslPtr H) {
  return make_operator(H, [](const Elem& x) { return x; });
}

EndoOperator constant_top_operator(FslPtr H) {
  Elem t = H->module()->top();
  return make_operator(H, [t](const Elem&) { return t; });
}

std::optional<std::string> prenucleus_violation(const EndoOperator& j) {
  const FSemilattice& H = *j.host;
  const Module& M = *H.module();
  const Carrier& C = j.carrier();
  const std::size_t n = C.size();
  const int nv = static_cast<int>(M.quantale().size());
  auto fmt = [&](std::size_t i) { return M.format(C.elems[i]); };
  for (std::size_t a = 0; a < n; ++a)
    if (!M.leq(C.elems[a], C.elems[j.values[a]])) return "N1 fails at " + fmt(a) + ": j(a) = " + fmt(j.values[a]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (M.leq(C.elems[a], C.elems[b]) && !M.leq(C.elems[j.values[a]], C.elems[j.values[b]]))
        return "N2 fails at " + fmt(a) + " <= " + fmt(b);
  for (std::size_t a = 0; a < n; ++a) {
    for (int v = 0; v < nv; ++v) {
      Elem lhs = M.act(v, C.elems[j.values[a]]);
      Elem rhs = j(M.act(v, C.elems[a]));
      if (!M.leq(lhs, rhs)) return "N3 fails at " + M.quantale().label(v) + ", " + fmt(a);
    }
    Elem lhs = H.F(C.elems[j.values[a]]);
    Elem rhs = j(H.F(C.elems[a]));
    if (!M.leq(lhs, rhs)) return "N4 fails at " + fmt(a) + ": F(j(a)) = " + M.format(lhs) + ", j(F(a)) = " + M.format(rhs);
  }
  return std::nullopt;
}

std::optional<std::string> nucleus_violation(const EndoOperator& j) {
  if (auto w = prenucleus_violation(j)) return w;
  for (std::size_t a = 0; a < j.values.size(); ++a)
    if (j.values[j.values[a]] != j.values[a])
      return "N5 fails at " + j.host->module()->format(j.carrier().elems[a]);
  return std::nullopt;
}

bool is_prenucleus(const EndoOperator& j) { return !prenucleus_violation(j).has_value(); }
bool is_nucleus(const EndoOperator& j) { return !nucleus_violation(j).has_value(); }

Quotient quotient(const EndoOperator& j) {
  if (auto w = nucleus_violation(j)) fail(ErrorKind::NotANucleus, *w);
  auto jj = std::make_shared<EndoOperator>(j);
  const FslPtr H = j.host;
  auto close = [jj](const Elem& x) { return (*jj)(x); };
  auto Q = std::make_shared<QuotientModule>(H->module(), close, H->module()->name() + "_j");
  auto fsl = make_fsemilattice(Q, [H, close](const Elem& x) { return close(H->F(x)); }, H->name() + "_j");
  return Quotient{fsl, FslMap{H, fsl, close}};
}

PairSet saturate_pairs(const FSemilattice& H, PairSet X) {
  const Module& M = *H.module();
  const int nv = static_cast<int>(M.quantale().size());
  std::set<std::pair<Elem, Elem>> seen(X.begin(), X.end());
  PairSet out(seen.begin(), seen.end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    auto [c, d] = out[k];
    auto add = [&](Elem a, Elem b) {
      std::pair<Elem, Elem> p{std::move(a), std::move(b)};
      if (seen.insert(p).second) out.push_back(std::move(p));
    };
    add(H.F(c), H.F(d));
    for (int v = 0; v < nv; ++v) add(M.act(v, c), M.act(v, d));
  }
  return out;
}

EndoOperator prenucleus_from_pairs(FslPtr H, const PairSet& X) {
  const PairSet S = saturate_pairs(*H, X);
  const Module& M = *H->module();
  return make_operator(H, [&](const Elem& a) {
    Elem acc = a;
    for (const auto& [c, d] : S) {
      if (M.leq(d, a)) acc = M.join(acc, c);
      if (M.leq(c, a)) acc = M.join(acc, d);
    }
    return acc;
  });
}

EndoOperator closure_by_iteration(const EndoOperator& j) {
  if (auto w = prenucleus_violation(j)) fail(ErrorKind::NotAPrenucleus, *w);
  EndoOperator n = j;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n.values.size(); ++a) {
      std::size_t next = j.values[n.values[a]];
      if (next != n.values[a]) {
        n.values[a] = next;
        changed = true;
      }
    }
  }
  return n;
}

EndoOperator closure_by_meets(const EndoOperator& j) {
  if (auto w = prenucleus_violation(j)) fail(ErrorKind::NotAPrenucleus, *w);
  const Module& M = *j.host->module();
  const Carrier& C = j.carrier();
  std::vector<std::size_t> fixed;
  for (std::size_t a = 0; a < C.size(); ++a)
    if (j.values[a] == a) fixed.push_back(a);
  const Elem top = M.top();
  EndoOperator n{j.host, std::vector<std::size_t>(C.size())};
  for (std::size_t a = 0; a < C.size(); ++a) {
    Elem acc = top;
    for (std::size_t x : fixed)
      if (M.leq(C.elems[a], C.elems[x])) acc = M.meet(acc, C.elems[x]);
    n.values[a] = C.index_of(acc);
  }
  return n;
}

EndoOperator closure_of(const EndoOperator& j) {
  EndoOperator a = closure_by_iteration(j);
  EndoOperator b = closure_by_meets(j);
  if (a.values != b.values) throw std::logic_error("closure routes disagree");
  return a;
}

Factorization factor_through(const FslMap& g, const PairSet& X) {
  const PairSet S = saturate_pairs(*g.source, X);
  const Module& B = *g.target->module();
  for (const auto& [c, d] : S)
    if (g(c) != g(d))
      fail(ErrorKind::GDoesNotRespectX, "g(" + g.source->module()->format(c) + ") = " + B.format(g(c)) + " but g(" +
                                            g.source->module()->format(d) + ") = " + B.format(g(d)));
  EndoOperator n = closure_of(prenucleus_from_pairs(g.source, S));
  Quotient q = quotient(n);
  FslMap gbar{q.fsl, g.target, g.fn};
  for (const auto& x : g.source->module()->carrier().elems)
    if (g(x) != gbar(n(x))) throw std::logic_error("factorization equation fails");
  return Factorization{std::move(n), std::move(q), std::move(gbar)};
}

std::optional<std::string> congruence_violation(const Congruence& c) {
  const FSemilattice& H = *c.host;
  const Module& M = *H.module();
  const Carrier& C = M.carrier();
  if (c.class_of.size() != C.size()) fail(ErrorKind::BadElementIndex, "partition does not cover the carrier");
  std::map<std::size_t, std::size_t> rep;
  for (std::size_t a = 0; a < C.size(); ++a) rep.emplace(c.class_of[a], a);
  auto cls = [&](const Elem& x) { return c.class_of[C.index_of(x)]; };
  const int nv = static_cast<int>(M.quantale().size());
  for (std::size_t a = 0; a < C.size(); ++a) {
    const Elem& x = C.elems[a];
    const Elem& r = C.elems[rep[c.class_of[a]]];
    auto pair = [&] { return "(" + M.format(x) + ", " + M.format(r) + ")"; };
    for (const auto& z : C.elems)
      if (cls(M.join(x, z)) != cls(M.join(r, z))) return "join with " + M.format(z) + " separates " + pair();
    for (int v = 0; v < nv; ++v)
      if (cls(M.act(v, x)) != cls(M.act(v, r))) return "action by " + M.quantale().label(v) + " separates " + pair();
    if (cls(H.F(x)) != cls(H.F(r))) return "F separates " + pair();
  }
  return std::nullopt;
}

Congruence congruence_from_nucleus(const EndoOperator& j) {
  if (auto w = nucleus_violation(j)) fail(ErrorKind::NotANucleus, *w);
  return Congruence{j.host, j.values};
}

EndoOperator nucleus_from_congruence(const Congruence& c) {
  if (auto w = congruence_violation(c)) fail(ErrorKind::NotACongruence, *w);
  const Module& M = *c.host->module();
  const Carrier& C = M.carrier();
  std::map<std::size_t, Elem> top;
  for (std::size_t a = 0; a < C.size(); ++a) {
    auto it = top.find(c.class_of[a]);
    if (it == top.end())
      top.emplace(c.class_of[a], C.elems[a]);
    else
      it->second = M.join(it->second, C.elems[a]);
  }
  EndoOperator j{c.host, std::vector<std::size_t>(C.size())};
  for (std::size_t a = 0; a < C.size(); ++a) j.values[a] = C.index_of(top[c.class_of[a]]);
  return j;
}

}  // namespace tensalg

#include "tensalg/functors.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "tensalg/error.hpp"

namespace tensalg {

Elem delta_element(const PowerModule& P, const Elem& x, std::size_t i) {
  Elem out = P.bottom();
  P.set_block(out, i, x);
  return out;
}

Elem smear_element(const PowerModule& P, const VFrame& J, const Elem& x, std::size_t i) {
  Elem out(P.width());
  for (std::size_t k = 0; k < J.size(); ++k) P.set_block(out, k, P.base()->act(J.r(i, k), x));
  return out;
}

PairSet tensor_pairs(const VFrame& J, const FSemilattice& H, const PowerModule& P) {
  PairSet X;
  for (const auto& x : H.module()->carrier().elems)
    for (std::size_t i = 0; i < J.size(); ++i) {
      Elem d = delta_element(P, H.F(x), i);
      X.emplace_back(P.join(smear_element(P, J, x, i), d), d);
    }
  return X;
}

namespace {

struct TensorCore {
  FramePtr J;
  FslPtr H;
  std::shared_ptr<const PowerModule> P;
  std::mutex mu;
  std::unordered_map<Elem, Elem, ElemHash> memo;

  Elem step(const Elem& a) const {
    const Module& A = *P->base();
    std::vector<Elem> m(J->size());
    for (std::size_t i = 0; i < J->size(); ++i) m[i] = H->F_upper(P->block(a, i));
    Elem out(P->width());
    for (std::size_t k = 0; k < J->size(); ++k) {
      Elem acc = P->block(a, k);
      for (std::size_t i = 0; i < J->size(); ++i) acc = A.join(acc, A.act(J->r(i, k), m[i]));
      P->set_block(out, k, acc);
    }
    return out;
  }

  // Index tables for the base module, built on first use when it is small
  // enough; the closure then runs on ints.
  struct Tables {
    std::size_t n = 0, nv = 0;
    std::vector<int> act, join, upper;
  };
  std::once_flag tables_once;
  std::unique_ptr<Tables> tables;
  static constexpr std::size_t kTableLimit = 256;

  const Tables* index_tables() {
    std::call_once(tables_once, [this] {
      const Module& A = *P->base();
      const Carrier* cp = nullptr;
      try {
        ScopedMaterializedCap cap(kTableLimit);
        cp = &A.carrier();
      } catch (const AlgebraError& e) {
        if (e.kind() != ErrorKind::SizeLimitExceeded) throw;
        return;
      }
      const Carrier& C = *cp;
      auto t = std::make_unique<Tables>();
      t->n = C.size();
      t->nv = A.quantale().size();
      t->act.resize(t->nv * t->n);
      t->join.resize(t->n * t->n);
      t->upper.resize(t->n);
      for (std::size_t x = 0; x < t->n; ++x) {
        for (std::size_t v = 0; v < t->nv; ++v)
          t->act[v * t->n + x] = static_cast<int>(C.index_of(A.act(static_cast<int>(v), C.elems[x])));
        for (std::size_t y = 0; y < t->n; ++y)
          t->join[x * t->n + y] = static_cast<int>(C.index_of(A.join(C.elems[x], C.elems[y])));
        t->upper[x] = static_cast<int>(C.index_of(H->F_upper(C.elems[x])));
      }
      tables = std::move(t);
    });
    return tables.get();
  }

  // j(a)(k) = a(k) v V_y (V_{i : m(i)=y} r(i,k)) * y, with m = F_* o a.
  Elem close_indexed(const Tables& t, const Elem& a) const {
    const Module& A = *P->base();
    const Carrier& C = A.carrier();
    const Quantale& Q = A.quantale();
    const std::size_t N = J->size();
    std::vector<int> x(N), nx(N), m(N), slot(N), ys, w;
    for (std::size_t i = 0; i < N; ++i) x[i] = static_cast<int>(C.index_of(P->block(a, i)));
    std::vector<int> where(t.n, -1);
    for (;;) {
      ys.clear();
      std::fill(where.begin(), where.end(), -1);
      for (std::size_t i = 0; i < N; ++i) {
        m[i] = t.upper[static_cast<std::size_t>(x[i])];
        int& s = where[static_cast<std::size_t>(m[i])];
        if (s < 0) {
          s = static_cast<int>(ys.size());
          ys.push_back(m[i]);
        }
        slot[i] = s;
      }
      for (std::size_t k = 0; k < N; ++k) {
        w.assign(ys.size(), Q.bottom());
        for (std::size_t i = 0; i < N; ++i) {
          int& c = w[static_cast<std::size_t>(slot[i])];
          c = Q.join(c, J->r(i, k));
        }
        int acc = x[k];
        for (std::size_t s = 0; s < ys.size(); ++s)
          acc = t.join[static_cast<std::size_t>(acc) * t.n +
                       static_cast<std::size_t>(t.act[static_cast<std::size_t>(w[s]) * t.n + static_cast<std::size_t>(ys[s])])];
        nx[k] = acc;
      }
      if (nx == x) break;
      std::swap(x, nx);
    }
    Elem out(P->width());
    for (std::size_t k = 0; k < N; ++k) P->set_block(out, k, C.elems[static_cast<std::size_t>(x[k])]);
    return out;
  }

  Elem close(const Elem& a) {
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = memo.find(a);
      if (it != memo.end()) return it->second;
    }
    Elem cur;
    if (const Tables* t = index_tables()) {
      cur = close_indexed(*t, a);
    } else {
      cur = a;
      for (;;) {
        Elem next = step(cur);
        if (next == cur) break;
        cur = std::move(next);
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(a, cur);
    return cur;
  }
};

}  // namespace

TensorModule::TensorModule(FramePtr J, FslPtr H) : frame_(std::move(J)), fsl_(std::move(H)) {
  require_commutative(fsl_->quantale(), "tensor");
  if (frame_->quantale_ptr() != fsl_->module()->quantale_ptr())
    fail(ErrorKind::QuantaleMismatch, "frame " + frame_->name() + " and " + fsl_->name() + " use different quantales");
  power_ = lazy_power(fsl_->module(), frame_->size());
  auto core = std::make_shared<TensorCore>();
  core->J = frame_;
  core->H = fsl_;
  core->P = power_;
  quotient_ = std::make_shared<QuotientModule>(
      power_, [core](const Elem& a) { return core->close(a); }, frame_->name() + "(x)" + fsl_->name());
}

Elem TensorModule::prenucleus(const Elem& a) const {
  TensorCore c;
  c.J = frame_;
  c.H = fsl_;
  c.P = power_;
  return c.step(a);
}

Elem TensorModule::nucleus(const Elem& a) const { return quotient_->close(a); }

ModuleMap TensorModule::projection() const {
  auto q = quotient_;
  return ModuleMap{power_, quotient_, [q](const Elem& a) { return q->close(a); }};
}

TensorPtr tensor(FramePtr J, FslPtr H) { return std::make_shared<TensorModule>(std::move(J), std::move(H)); }

LiteralTensor tensor_from_pairs(FramePtr J, FslPtr H) {
  require_commutative(H->quantale(), "tensor");
  auto P = power_module(H->module(), J->size());
  LiteralTensor t{identity_fsemilattice(P), tensor_pairs(*J, *H, *P), {}, {}, {}};
  t.prenucleus = prenucleus_from_pairs(t.power, t.pairs);
  t.nucleus = closure_of(t.prenucleus);
  t.quotient = quotient(t.nucleus);
  return t;
}

ModuleMap forward_map(const FrameHom& f, ModulePtr A) {
  auto P1 = lazy_power(A, f.source->size());
  auto P2 = lazy_power(A, f.target->size());
  auto map = f.map;
  return ModuleMap{P1, P2, [P1, P2, map](const Elem& x) {
                     Elem out = P2->bottom();
                     const Module& B = *P1->base();
                     for (std::size_t i = 0; i < map.size(); ++i)
                       P2->set_block(out, map[i], B.join(P2->block(out, map[i]), P1->block(x, i)));
                     return out;
                   }};
}

ModuleMap tensor_frame_hom(const FrameHom& f, TensorPtr T1, TensorPtr T2) {
  if (T1->fsl() != T2->fsl()) fail(ErrorKind::CompositionMismatch, "f (x) H needs both tensors over the same H");
  auto fwd = forward_map(f, T1->fsl()->module());
  auto q2 = T2->quotient();
  return ModuleMap{T1->module(), T2->module(), [fwd, q2](const Elem& p) { return q2->close(fwd(p)); }};
}

ModuleMap tensor_lax_hom(const FslMap& f, TensorPtr T1, TensorPtr T2) {
  auto P1 = T1->power();
  auto P2 = T2->power();
  auto q2 = T2->quotient();
  auto fn = f.fn;
  const std::size_t n = T1->frame()->size();
  return ModuleMap{T1->module(), T2->module(), [P1, P2, q2, fn, n](const Elem& p) {
                     Elem out(P2->width());
                     for (std::size_t i = 0; i < n; ++i) P2->set_block(out, i, fn(P1->block(p, i)));
                     return q2->close(out);
                   }};
}

std::optional<std::string> tensor_frame_square_violation(const FrameHom& f, TensorPtr T1, TensorPtr T2) {
  auto fwd = forward_map(f, T1->fsl()->module());
  auto fH = tensor_frame_hom(f, T1, T2);
  for (const auto& x : T1->power()->carrier().elems) {
    Elem lhs = T2->nucleus(fwd(x));
    Elem rhs = fH(T1->nucleus(x));
    if (lhs != rhs)
      return "at " + T1->power()->format(x) + ": " + T2->power()->format(lhs) + " vs " + T2->power()->format(rhs);
  }
  return std::nullopt;
}

std::optional<std::string> tensor_lax_square_violation(const FslMap& f, TensorPtr T1, TensorPtr T2) {
  auto Jf = tensor_lax_hom(f, T1, T2);
  auto P1 = T1->power();
  auto P2 = T2->power();
  for (const auto& x : P1->carrier().elems) {
    Elem fx(P2->width());
    for (std::size_t i = 0; i < T1->frame()->size(); ++i) P2->set_block(fx, i, f(P1->block(x, i)));
    Elem lhs = T2->nucleus(fx);
    Elem rhs = Jf(T1->nucleus(x));
    if (lhs != rhs) return "at " + P1->format(x) + ": " + P2->format(lhs) + " vs " + P2->format(rhs);
  }
  return std::nullopt;
}

// ---- hom frames ----

int hom_relation(const FSemilattice& H, const Module& L, const ModuleMap& alpha, const ModuleMap& beta) {
  const Quantale& Q = L.quantale();
  int acc = Q.top();
  for (const auto& x : H.module()->carrier().elems) acc = Q.meet(acc, module_residuate(L, beta(x), alpha(H.F(x))));
  return acc;
}

HomFrame::HomFrame(FslPtr H, ModulePtr L) : fsl_(std::move(H)), target_(std::move(L)) {
  require_commutative(fsl_->quantale(), "hom_frame");
  homs_ = enumerate_module_homs(fsl_->module(), target_);
  check_materialized_size(homs_.size(), "point set of J[" + fsl_->name() + "," + target_->name() + "]");
  for (std::size_t p = 0; p < homs_.size(); ++p) index_.emplace(homs_[p].values, p);

  const Module& A = *fsl_->module();
  const Module& L_ = *target_;
  const Quantale& Q = L_.quantale();
  const auto& C = A.carrier();
  std::vector<std::size_t> Fidx(C.size());
  for (std::size_t x = 0; x < C.size(); ++x) Fidx[x] = C.index_of(fsl_->F(C.elems[x]));
  const auto& LC = L_.carrier();
  const std::size_t m = LC.size();
  // residuals on indices of L, so the n^2 |C| loop below stays on ints
  std::vector<int> res(m * m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t w = 0; w < m; ++w) res[u * m + w] = module_residuate(L_, LC.elems[u], LC.elems[w]);
  // {x : v * beta(x) <= alpha(F x)} is join-closed, so the meet defining r
  // only has to range over join-generators of H.
  std::vector<std::size_t> gx;
  for (const auto& g : A.generators()) gx.push_back(C.index_of(g));
  const std::size_t n = homs_.size();
  std::vector<std::size_t> lhs(n * gx.size()), rhs(n * gx.size());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < gx.size(); ++k) {
      lhs[a * gx.size() + k] = LC.index_of(homs_[a].values[gx[k]]) * m;
      rhs[a * gx.size() + k] = LC.index_of(homs_[a].values[Fidx[gx[k]]]);
    }
  std::vector<int> r(n * n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string s = "[";
    for (std::size_t x = 0; x < C.size(); ++x) s += (x ? "," : "") + L_.format(homs_[a].values[x]);
    labels.push_back(s + "]");
    const std::size_t* ra = &rhs[a * gx.size()];
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t* lb = &lhs[b * gx.size()];
      int acc = Q.top();
      for (std::size_t k = 0; k < gx.size() && acc != Q.bottom(); ++k) acc = Q.meet(acc, res[lb[k] + ra[k]]);
      r[a * n + b] = acc;
    }
  }
  frame_ = std::make_shared<VFrame>(fsl_->module()->quantale_ptr(), std::move(labels), std::move(r),
                                    "J[" + fsl_->name() + "," + target_->name() + "]");
}

std::optional<std::size_t> HomFrame::find(const ModuleHom& h) const {
  auto it = index_.find(h.values);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t HomFrame::index_of(const ModuleHom& h) const {
  if (auto p = find(h)) return *p;
  throw std::logic_error("map is not a point of " + frame_->name());
}

HomFramePtr hom_frame(FslPtr H, ModulePtr L) { return std::make_shared<HomFrame>(std::move(H), std::move(L)); }

FrameHom hom_frame_covariant(const ModuleMap& f, HomFramePtr src, HomFramePtr dst) {
  FrameHom t{src->frame(), dst->frame(), {}};
  for (const auto& alpha : src->homs()) {
    ModuleHom img{alpha.source, dst->target(), {}};
    for (const auto& v : alpha.values) img.values.push_back(f(v));
    t.map.push_back(dst->index_of(img));
  }
  return t;
}

FrameHom hom_frame_contravariant(const FslMap& f, HomFramePtr src_H2, HomFramePtr dst_H1) {
  FrameHom t{src_H2->frame(), dst_H1->frame(), {}};
  const auto& C1 = dst_H1->fsl()->module()->carrier();
  for (const auto& alpha : src_H2->homs()) {
    ModuleHom img{dst_H1->fsl()->module(), alpha.target, {}};
    for (const auto& y : C1.elems) img.values.push_back(alpha(f(y)));
    t.map.push_back(dst_H1->index_of(img));
  }
  return t;
}

}  // namespace tensalg

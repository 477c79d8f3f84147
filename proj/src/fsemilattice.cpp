#include "tensalg/fsemilattice.hpp"

#include "tensalg/error.hpp"

namespace tensalg {

Elem FSemilattice::F_upper(const Elem& y) const {
  const Module& M = *module_;
  Elem acc = M.bottom();
  for (const auto& x : M.carrier().elems)
    if (M.leq(F(x), y)) acc = M.join(acc, x);
  return acc;
}

ModuleMap FSemilattice::F_map() const {
  return ModuleMap{module_, module_, [this](const Elem& x) { return F(x); }};
}

Elem FunctionFSemilattice::F_upper(const Elem& y) const {
  const Module& M = *module();
  std::call_once(once_, [&] {
    const auto& C = M.carrier();
    upper_.resize(C.size());
    for (std::size_t k = 0; k < C.size(); ++k) upper_[k] = FSemilattice::F_upper(C.elems[k]);
  });
  return upper_[M.carrier().index_of(y)];
}

PowerFSemilattice::PowerFSemilattice(std::shared_ptr<const PowerModule> P, FramePtr J, std::string name)
    : FSemilattice(P, std::move(name)), power_(std::move(P)), frame_(std::move(J)) {}

Elem PowerFSemilattice::F(const Elem& x) const {
  const PowerModule& P = *power_;
  const Module& A = *P.base();
  const VFrame& J = *frame_;
  Elem out(P.width());
  for (std::size_t i = 0; i < J.size(); ++i) {
    Elem acc = A.bottom();
    for (std::size_t k = 0; k < J.size(); ++k) acc = A.join(acc, A.act(J.r(i, k), P.block(x, k)));
    P.set_block(out, i, acc);
  }
  return out;
}

// F^J(x) <= y iff r(i,k)*x(k) <= y(i) for all i,k, so the largest x has
// x(k) = meet_i (largest m with r(i,k)*m <= y(i)).
Elem PowerFSemilattice::F_upper(const Elem& y) const {
  const PowerModule& P = *power_;
  const Module& A = *P.base();
  const VFrame& J = *frame_;
  Elem out(P.width());
  for (std::size_t k = 0; k < J.size(); ++k) {
    Elem acc = A.residual(J.r(0, k), P.block(y, 0));
    for (std::size_t i = 1; i < J.size(); ++i) acc = A.meet(acc, A.residual(J.r(i, k), P.block(y, i)));
    P.set_block(out, k, acc);
  }
  return out;
}

std::optional<std::string> fsemilattice_violation(const FSemilattice& H) {
  if (auto w = module_hom_violation(H.F_map())) return "F is not a module hom: " + *w;
  return std::nullopt;
}

FslPtr make_fsemilattice(ModulePtr M, std::function<Elem(const Elem&)> F, std::string name) {
  return std::make_shared<FunctionFSemilattice>(std::move(M), std::move(F), std::move(name));
}

FslPtr identity_fsemilattice(ModulePtr M) {
  std::string n = M->name() + "+id";
  return make_fsemilattice(std::move(M), [](const Elem& x) { return x; }, std::move(n));
}

FslPtr validate_fsemilattice(TableModulePtr M, const std::vector<int>& F, std::string name) {
  if (F.size() != M->size()) fail(ErrorKind::BadElementIndex, "F table has wrong length");
  for (int y : F)
    if (y < 0 || y >= static_cast<int>(M->size())) fail(ErrorKind::BadElementIndex, "F entry out of range");
  auto H = make_fsemilattice(M, [F](const Elem& x) { return Elem{F[static_cast<std::size_t>(x[0])]}; }, std::move(name));
  if (auto w = fsemilattice_violation(*H)) fail(ErrorKind::FNotModuleHom, *w);
  return H;
}

FslMap identity_fsl_map(FslPtr H) { return FslMap{H, H, [](const Elem& x) { return x; }}; }

FslMap compose(const FslMap& g, const FslMap& f) {
  auto gf = g.fn;
  auto ff = f.fn;
  return FslMap{f.source, g.target, [gf, ff](const Elem& x) { return gf(ff(x)); }};
}

namespace {

template <class Cmp>
std::optional<std::string> f_relation_violation(const FslMap& f, Cmp ok, const char* rel) {
  if (f.source->module()->quantale_ptr() != f.target->module()->quantale_ptr())
    fail(ErrorKind::QuantaleMismatch, f.source->name() + " and " + f.target->name() + " use different quantales");
  if (auto w = module_hom_violation(f.as_module_map())) return "not a module hom: " + *w;
  const Module& B = *f.target->module();
  for (const auto& a : f.source->module()->carrier().elems) {
    Elem lhs = f.target->F(f(a));
    Elem rhs = f(f.source->F(a));
    if (!ok(B, lhs, rhs))
      return "at " + f.source->module()->format(a) + ": H(f(a)) = " + B.format(lhs) + " not " + rel +
             " f(F(a)) = " + B.format(rhs);
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> f_hom_violation(const FslMap& f) {
  return f_relation_violation(f, [](const Module&, const Elem& a, const Elem& b) { return a == b; }, "equal to");
}

std::optional<std::string> lax_violation(const FslMap& f) {
  return f_relation_violation(f, [](const Module& B, const Elem& a, const Elem& b) { return B.leq(a, b); }, "below");
}

bool is_f_hom(const FslMap& f) { return !f_hom_violation(f).has_value(); }
bool is_lax_morphism(const FslMap& f) { return !lax_violation(f).has_value(); }

PowerFslPtr lazy_FJ(ModulePtr A, FramePtr J) {
  require_commutative(A->quantale(), "construct_FJ");
  if (A->quantale_ptr() != J->quantale_ptr())
    fail(ErrorKind::QuantaleMismatch, A->name() + " and frame " + J->name() + " use different quantales");
  std::string name = A->name() + "^" + J->name();
  return std::make_shared<PowerFSemilattice>(lazy_power(std::move(A), J->size()), std::move(J), std::move(name));
}

PowerFslPtr construct_FJ(ModulePtr A, FramePtr J) {
  require_commutative(A->quantale(), "construct_FJ");
  power_module(A, J->size());
  auto H = lazy_FJ(std::move(A), std::move(J));
  if (auto w = fsemilattice_violation(*H)) fail(ErrorKind::FNotModuleHom, "F^J: " + *w);
  return H;
}

FslMap lift_hom_FJ(const ModuleMap& f, PowerFslPtr src, PowerFslPtr dst) {
  auto fn = f.fn;
  const PowerModule* ps = &src->power();
  const PowerModule* pd = &dst->power();
  const std::size_t n = ps->count();
  return FslMap{src, dst, [fn, ps, pd, n, keep = src, keep2 = dst](const Elem& x) {
                  Elem out(pd->width());
                  for (std::size_t i = 0; i < n; ++i) pd->set_block(out, i, fn(ps->block(x, i)));
                  return out;
                }};
}

FslMap lift_hom_FJ(const ModuleMap& f, FramePtr J) {
  return lift_hom_FJ(f, lazy_FJ(f.source, J), lazy_FJ(f.target, J));
}

FslMap restrict_along_frame_hom(const FrameHom& t, PowerFslPtr src_J2, PowerFslPtr dst_J1) {
  const PowerModule* ps = &src_J2->power();
  const PowerModule* pd = &dst_J1->power();
  auto map = t.map;
  return FslMap{src_J2, dst_J1, [ps, pd, map, keep = src_J2, keep2 = dst_J1](const Elem& x) {
                  Elem out(pd->width());
                  for (std::size_t i = 0; i < map.size(); ++i) pd->set_block(out, i, ps->block(x, map[i]));
                  return out;
                }};
}

FslMap restrict_along_frame_hom(const FrameHom& t, ModulePtr A) {
  return restrict_along_frame_hom(t, lazy_FJ(A, t.target), lazy_FJ(A, t.source));
}

}  // namespace tensalg

#include "tensalg/adjunctions.hpp"

#include <stdexcept>

#include "tensalg/error.hpp"

namespace tensalg {

void CheckReport::add(std::string name, std::string instance, const std::optional<std::string>& violation) {
  checks.push_back(CheckResult{std::move(name), std::move(instance), !violation.has_value(), violation.value_or("")});
}

void CheckReport::merge(const CheckReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  rejections += other.rejections;
}

std::size_t CheckReport::passed() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.pass ? 1 : 0;
  return n;
}

std::size_t CheckReport::failed() const { return checks.size() - passed(); }

namespace {

PowerFslPtr as_power(const FslPtr& H) {
  auto P = std::dynamic_pointer_cast<const PowerFSemilattice>(H);
  if (!P) throw std::logic_error(H->name() + " is not a power F-semilattice");
  return P;
}

// Compare two maps on every element of a carrier.
template <class F, class G>
std::optional<std::string> differ_on(const Module& dom, const Module& cod, const std::vector<Elem>& xs, F lhs, G rhs) {
  for (const auto& x : xs) {
    Elem a = lhs(x);
    Elem b = rhs(x);
    if (a != b) return "at " + dom.format(x) + ": " + cod.format(a) + " vs " + cod.format(b);
  }
  return std::nullopt;
}

Elem blockwise(const PowerModule& src, const PowerModule& dst, std::size_t n, const Elem& x,
               const std::function<Elem(const Elem&)>& f) {
  Elem out(dst.width());
  for (std::size_t i = 0; i < n; ++i) dst.set_block(out, i, f(src.block(x, i)));
  return out;
}

}  // namespace

// ---- units and counits ----

FslMap unit_eta(TensorPtr JH) {
  auto target = lazy_FJ(JH->module(), JH->frame());
  auto P = JH->power();
  const PowerModule* Pt = &target->power();
  return FslMap{JH->fsl(), target, [JH, P, Pt, target](const Elem& x) {
                  Elem out(Pt->width());
                  for (std::size_t i = 0; i < JH->frame()->size(); ++i)
                    Pt->set_block(out, i, JH->nucleus(delta_element(*P, x, i)));
                  return out;
                }};
}

namespace {

std::function<Elem(const Elem&)> e_function(TensorPtr JLJ) {
  auto LJ = as_power(JLJ->fsl());
  auto outer = JLJ->power();
  return [LJ, outer](const Elem& xb) {
    const PowerModule& inner = LJ->power();
    const Module& L = *LJ->base();
    Elem acc = L.bottom();
    for (std::size_t i = 0; i < outer->count(); ++i) acc = L.join(acc, inner.block(outer->block(xb, i), i));
    return acc;
  };
}

}  // namespace

ModuleMap counit_e(TensorPtr JLJ) { return ModuleMap{JLJ->power(), as_power(JLJ->fsl())->base(), e_function(JLJ)}; }

ModuleMap counit_eps(TensorPtr JLJ) {
  return ModuleMap{JLJ->module(), as_power(JLJ->fsl())->base(), e_function(JLJ)};
}

std::optional<std::string> eps_factorization_violation(TensorPtr JLJ) {
  auto e = counit_e(JLJ);
  auto eps = counit_eps(JLJ);
  return differ_on(*JLJ->power(), *e.target, JLJ->power()->carrier().elems, e.fn,
                   [&](const Elem& x) { return eps(JLJ->nucleus(x)); });
}

ModuleHom phi_point(TensorPtr JH, std::size_t i) {
  ModuleHom h{JH->fsl()->module(), JH->module(), {}};
  for (const auto& x : h.source->carrier().elems) h.values.push_back(JH->nucleus(delta_element(*JH->power(), x, i)));
  return h;
}

FrameHom unit_phi(TensorPtr JH, HomFramePtr HJH) {
  FrameHom t{JH->frame(), HJH->frame(), {}};
  for (std::size_t i = 0; i < JH->frame()->size(); ++i) t.map.push_back(HJH->index_of(phi_point(JH, i)));
  return t;
}

namespace {

std::function<Elem(const Elem&)> f_function(HomFramePtr HL, TensorPtr T) {
  if (T->frame() != HL->frame()) throw std::logic_error("tensor is not over J[H,L]");
  auto P = T->power();
  return [HL, P](const Elem& y) {
    const Module& L = *HL->target();
    Elem acc = L.bottom();
    for (std::size_t a = 0; a < HL->size(); ++a) acc = L.join(acc, HL->homs()[a](P->block(y, a)));
    return acc;
  };
}

}  // namespace

ModuleMap counit_f(HomFramePtr HL, TensorPtr T) { return ModuleMap{T->power(), HL->target(), f_function(HL, T)}; }

ModuleMap counit_psi(HomFramePtr HL, TensorPtr T) { return ModuleMap{T->module(), HL->target(), f_function(HL, T)}; }

std::optional<std::string> psi_factorization_violation(HomFramePtr HL, TensorPtr T) {
  auto f = counit_f(HL, T);
  auto psi = counit_psi(HL, T);
  return differ_on(*T->power(), *HL->target(), T->power()->carrier().elems, f.fn,
                   [&](const Elem& x) { return psi(T->nucleus(x)); });
}

ModuleHom nu_point(PowerFslPtr LJ, ModulePtr L, std::size_t i) {
  ModuleHom h{LJ->module(), std::move(L), {}};
  for (const auto& x : LJ->module()->carrier().elems) h.values.push_back(LJ->power().block(x, i));
  return h;
}

FrameHom unit_nu(PowerFslPtr LJ, HomFramePtr LJL) {
  FrameHom t{LJ->frame(), LJL->frame(), {}};
  for (std::size_t i = 0; i < LJ->frame()->size(); ++i) t.map.push_back(LJL->index_of(nu_point(LJ, LJL->target(), i)));
  return t;
}

FslMap unit_mu(HomFramePtr HL) {
  auto target = lazy_FJ(HL->target(), HL->frame());
  const PowerModule* Pt = &target->power();
  return FslMap{HL->fsl(), target, [HL, Pt, target](const Elem& x) {
                  Elem out(Pt->width());
                  for (std::size_t a = 0; a < HL->size(); ++a) Pt->set_block(out, a, HL->homs()[a](x));
                  return out;
                }};
}

// ---- triangles ----

CheckReport check_triangles_adjunction1(FramePtr J, FslPtr H, ModulePtr L, const std::string& tag) {
  CheckReport rep;
  {
    auto T = tensor(J, H);
    auto eta = unit_eta(T);
    auto T2 = tensor(J, eta.target);
    auto Jeta = tensor_lax_hom(eta, T, T2);
    auto eps = counit_eps(T2);
    rep.add("adj1.triangle.eps_JH_o_J_eta", tag,
            differ_on(*T->module(), *T->module(), T->module()->carrier().elems,
                      [&](const Elem& p) { return eps(Jeta(p)); }, [](const Elem& p) { return p; }));
  }
  {
    auto LJ = lazy_FJ(L, J);
    auto T = tensor(J, LJ);
    auto eta = unit_eta(T);
    auto eps = counit_eps(T);
    auto TJ = as_power(eta.target);
    const std::size_t n = J->size();
    rep.add("adj1.triangle.epsJ_o_eta_LJ", tag,
            differ_on(*LJ->module(), *LJ->module(), LJ->module()->carrier().elems,
                      [&](const Elem& x) { return blockwise(TJ->power(), LJ->power(), n, eta(x), eps.fn); },
                      [](const Elem& x) { return x; }));
  }
  return rep;
}

CheckReport check_triangles_adjunction2(FramePtr J, FslPtr H, ModulePtr L, const std::string& tag) {
  CheckReport rep;
  {
    auto T = tensor(J, H);
    auto HF = hom_frame(H, T->module());
    auto phi = unit_phi(T, HF);
    auto T2 = tensor(HF->frame(), H);
    auto phiH = tensor_frame_hom(phi, T, T2);
    auto psi = counit_psi(HF, T2);
    rep.add("adj2.triangle.psi_JH_o_phi_H", tag,
            differ_on(*T->module(), *T->module(), T->module()->carrier().elems,
                      [&](const Elem& p) { return psi(phiH(p)); }, [](const Elem& p) { return p; }));
  }
  {
    auto HF = hom_frame(H, L);
    auto T = tensor(HF->frame(), H);
    auto psi = counit_psi(HF, T);
    std::optional<std::string> bad;
    for (std::size_t a = 0; a < HF->size() && !bad; ++a) {
      const ModuleHom& alpha = HF->homs()[a];
      auto w = differ_on(*H->module(), *L, H->module()->carrier().elems,
                         [&](const Elem& x) { return psi(T->nucleus(delta_element(*T->power(), x, a))); },
                         [&](const Elem& x) { return alpha(x); });
      if (w) bad = "point " + HF->frame()->points()[a] + " " + *w;
    }
    rep.add("adj2.triangle.JHpsi_o_phi_JHL", tag, bad);
  }
  return rep;
}

CheckReport check_triangles_adjunction3(FramePtr J, FslPtr H, ModulePtr L, const std::string& tag) {
  CheckReport rep;
  {
    auto LJ = lazy_FJ(L, J);
    auto HF = hom_frame(LJ, L);
    auto nu = unit_nu(LJ, HF);
    auto mu = unit_mu(HF);
    auto Lnu = restrict_along_frame_hom(nu, L);
    rep.add("adj3.triangle.Lnu_o_mu_LJ", tag,
            differ_on(*LJ->module(), *LJ->module(), LJ->module()->carrier().elems,
                      [&](const Elem& x) { return Lnu(mu(x)); }, [](const Elem& x) { return x; }));
  }
  {
    auto HF = hom_frame(H, L);
    auto mu = unit_mu(HF);
    auto P = as_power(mu.target);
    std::optional<std::string> bad;
    for (std::size_t a = 0; a < HF->size() && !bad; ++a) {
      const ModuleHom& alpha = HF->homs()[a];
      auto w = differ_on(*H->module(), *L, H->module()->carrier().elems,
                         [&](const Elem& x) { return P->power().block(mu(x), a); },
                         [&](const Elem& x) { return alpha(x); });
      if (w) bad = "point " + HF->frame()->points()[a] + " " + *w;
    }
    rep.add("adj3.triangle.Jmu_o_nu_JHL", tag, bad);
  }
  return rep;
}

// ---- naturality ----

const char* to_string(NaturalityKind k) {
  switch (k) {
    case NaturalityKind::Eta: return "eta";
    case NaturalityKind::Eps: return "eps";
    case NaturalityKind::Phi: return "phi";
    case NaturalityKind::Psi: return "psi";
    case NaturalityKind::Nu: return "nu";
    case NaturalityKind::Mu: return "mu";
  }
  return "?";
}

std::optional<std::string> naturality_eta(FramePtr J, const FslMap& f) {
  auto T1 = tensor(J, f.source);
  auto T2 = tensor(J, f.target);
  auto eta1 = unit_eta(T1);
  auto eta2 = unit_eta(T2);
  auto Jf = tensor_lax_hom(f, T1, T2);
  auto P1 = as_power(eta1.target);
  auto P2 = as_power(eta2.target);
  return differ_on(*f.source->module(), *P2->module(), f.source->module()->carrier().elems,
                   [&](const Elem& x) { return blockwise(P1->power(), P2->power(), J->size(), eta1(x), Jf.fn); },
                   [&](const Elem& x) { return eta2(f(x)); });
}

std::optional<std::string> naturality_eps(FramePtr J, const ModuleMap& g) {
  auto L1J = lazy_FJ(g.source, J);
  auto L2J = lazy_FJ(g.target, J);
  auto T1 = tensor(J, L1J);
  auto T2 = tensor(J, L2J);
  auto gJ = lift_hom_FJ(g, L1J, L2J);
  auto JgJ = tensor_lax_hom(gJ, T1, T2);
  auto eps1 = counit_eps(T1);
  auto eps2 = counit_eps(T2);
  return differ_on(*T1->module(), *g.target, T1->module()->carrier().elems,
                   [&](const Elem& p) { return eps2(JgJ(p)); }, [&](const Elem& p) { return g(eps1(p)); });
}

std::optional<std::string> naturality_phi(FslPtr H, const FrameHom& t) {
  auto T1 = tensor(t.source, H);
  auto T2 = tensor(t.target, H);
  auto HF1 = hom_frame(H, T1->module());
  auto HF2 = hom_frame(H, T2->module());
  auto phi1 = unit_phi(T1, HF1);
  auto phi2 = unit_phi(T2, HF2);
  auto tH = tensor_frame_hom(t, T1, T2);
  auto JHtH = hom_frame_covariant(tH, HF1, HF2);
  for (std::size_t i = 0; i < t.source->size(); ++i)
    if (JHtH(phi1(i)) != phi2(t(i)))
      return "at point " + t.source->points()[i] + ": " + HF2->frame()->points()[JHtH(phi1(i))] + " vs " +
             HF2->frame()->points()[phi2(t(i))];
  return std::nullopt;
}

std::optional<std::string> naturality_psi(FslPtr H, const ModuleMap& g) {
  auto HF1 = hom_frame(H, g.source);
  auto HF2 = hom_frame(H, g.target);
  auto JHg = hom_frame_covariant(g, HF1, HF2);
  auto T1 = tensor(HF1->frame(), H);
  auto T2 = tensor(HF2->frame(), H);
  auto JHgH = tensor_frame_hom(JHg, T1, T2);
  auto psi1 = counit_psi(HF1, T1);
  auto psi2 = counit_psi(HF2, T2);
  return differ_on(*T1->module(), *g.target, T1->module()->carrier().elems,
                   [&](const Elem& p) { return psi2(JHgH(p)); }, [&](const Elem& p) { return g(psi1(p)); });
}

std::optional<std::string> naturality_nu(ModulePtr L, const FrameHom& t) {
  auto LJ1 = lazy_FJ(L, t.source);
  auto LJ2 = lazy_FJ(L, t.target);
  auto HF1 = hom_frame(LJ1, L);
  auto HF2 = hom_frame(LJ2, L);
  auto nu1 = unit_nu(LJ1, HF1);
  auto nu2 = unit_nu(LJ2, HF2);
  auto Lt = restrict_along_frame_hom(t, LJ2, LJ1);
  auto JLtL = hom_frame_contravariant(Lt, HF1, HF2);
  for (std::size_t i = 0; i < t.source->size(); ++i)
    if (JLtL(nu1(i)) != nu2(t(i)))
      return "at point " + t.source->points()[i] + ": " + HF2->frame()->points()[JLtL(nu1(i))] + " vs " +
             HF2->frame()->points()[nu2(t(i))];
  return std::nullopt;
}

std::optional<std::string> naturality_mu(ModulePtr L, const FslMap& f) {
  auto HF1 = hom_frame(f.source, L);
  auto HF2 = hom_frame(f.target, L);
  auto Jf = hom_frame_contravariant(f, HF2, HF1);
  auto mu1 = unit_mu(HF1);
  auto mu2 = unit_mu(HF2);
  auto LJf = restrict_along_frame_hom(Jf, as_power(mu1.target), as_power(mu2.target));
  return differ_on(*f.source->module(), *mu2.target->module(), f.source->module()->carrier().elems,
                   [&](const Elem& x) { return LJf(mu1(x)); }, [&](const Elem& x) { return mu2(f(x)); });
}

// ---- validators ----

CheckReport validate_components(FramePtr J, FslPtr H, ModulePtr L, const std::string& tag) {
  CheckReport rep;
  const ModulePtr& A = H->module();
  rep.add("law.power_module.A^T", tag, module_law_violation(*power_module(A, J->size())));
  rep.add("law.power_module.L^T", tag, module_law_violation(*power_module(L, J->size())));
  auto AJ = lazy_FJ(A, J);
  auto LJ = lazy_FJ(L, J);
  rep.add("law.FJ.A", tag, fsemilattice_violation(*AJ));
  rep.add("law.FJ.L", tag, fsemilattice_violation(*LJ));

  auto T = tensor(J, H);
  rep.add("law.quotient.JxH", tag, module_law_violation(*T->module()));
  rep.add("law.projection.JxH", tag, module_hom_violation(T->projection()));
  rep.add("law.eta_H.lax", tag, lax_violation(unit_eta(T)));

  auto TL = tensor(J, LJ);
  rep.add("law.quotient.JxLJ", tag, module_law_violation(*TL->module()));
  rep.add("law.eps_L.module_hom", tag, module_hom_violation(counit_eps(TL)));

  auto HF = hom_frame(H, L);
  {
    std::optional<std::string> bad;
    for (const auto& alpha : HF->homs())
      if (!bad) bad = module_hom_violation(alpha.as_map());
    rep.add("law.hom_frame.points", tag, bad);
  }
  auto TP = tensor(HF->frame(), H);
  rep.add("law.quotient.JHLxH", tag, module_law_violation(*TP->module()));
  rep.add("law.psi_L.module_hom", tag, module_hom_violation(counit_psi(HF, TP)));
  rep.add("law.mu_H.lax", tag, lax_violation(unit_mu(HF)));
  {
    auto phi = unit_phi(T, hom_frame(H, T->module()));
    std::optional<std::string> bad = frame_hom_violation(phi);
    for (std::size_t i = 0; i < J->size() && !bad; ++i) bad = module_hom_violation(phi_point(T, i).as_map());
    rep.add("law.phi_J.frame_hom", tag, bad);
  }
  {
    auto nu = unit_nu(LJ, hom_frame(LJ, L));
    std::optional<std::string> bad = frame_hom_violation(nu);
    for (std::size_t i = 0; i < J->size() && !bad; ++i) bad = module_hom_violation(nu_point(LJ, L, i).as_map());
    rep.add("law.nu_J.frame_hom", tag, bad);
  }
  return rep;
}

}  // namespace tensalg

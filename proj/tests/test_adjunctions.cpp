#include "doctest.h"
#include "fixtures.hpp"

using namespace tensalg;

namespace {

const Workspace& two_instants() {
  static const Workspace ws = load_workspace(TENSALG_DATA_DIR "/two_instants.json");
  return ws;
}

void require_clean(const CheckReport& rep) {
  for (const auto& c : rep.checks) {
    INFO(c.name << " " << c.instance << " " << c.witness);
    CHECK(c.pass);
  }
  CHECK(rep.checks.size() > 0);
}

}  // namespace

TEST_SUITE("adjunctions") {
  TEST_CASE("triangles and components on the two-instant example") {
    const auto& ws = two_instants();
    auto J = ws.frame("J");
    auto L = ws.module("L");
    for (const char* h : {"H", "I"}) {
      auto H = ws.fsl(h).fsl;
      require_clean(check_triangles_adjunction1(J, H, L, h));
      require_clean(check_triangles_adjunction2(J, H, L, h));
      require_clean(check_triangles_adjunction3(J, H, L, h));
      require_clean(validate_components(J, H, L, h));
    }
  }

  TEST_CASE("one-point instances") {
    for (const auto& V : curated_quantales()) {
      auto Z = fx::trivial_module(V);
      auto H = identity_fsemilattice(Z);
      for (int r : {V->bottom(), V->unit(), V->top()}) {
        auto J = fx::frame_of(V, {{r}});
        require_clean(check_triangles_adjunction1(J, H, Z));
        require_clean(check_triangles_adjunction2(J, H, Z));
        require_clean(check_triangles_adjunction3(J, H, Z));
      }
    }
  }

  TEST_CASE("eta with one point and no accessibility") {
    const auto& ws = fx::example();
    auto A = ws.module("A");
    auto V = ws.quantale("V");
    auto H = validate_fsemilattice(A, {0, 0, 0, 0, 0});
    auto T = tensor(fx::frame_of(V, {{0}}), H);
    auto eta = unit_eta(T);
    CHECK(is_lax_morphism(eta));
    for (const auto& x : A->carrier().elems) CHECK(eta(x) == x);
  }

  TEST_CASE("eps with one point is evaluation") {
    const auto& ws = fx::example();
    auto L = ws.module("L");
    auto V = ws.quantale("V");
    auto J = fx::frame_of(V, {{V->unit()}});
    auto T = tensor(J, lazy_FJ(L, J));
    auto eps = counit_eps(T);
    CHECK(eps_factorization_violation(T) == fx::ok());
    CHECK(is_module_hom(eps));
    for (const auto& x : T->module()->carrier().elems) CHECK(eps(x) == x);
  }

  TEST_CASE("mu on the diamond example") {
    const auto& ws = fx::example();
    auto HF = hom_frame(ws.fsl("H").fsl, ws.module("L"));
    auto mu = unit_mu(HF);
    CHECK(is_lax_morphism(mu));
    auto P = std::dynamic_pointer_cast<const PowerFSemilattice>(mu.target);
    REQUIRE(P);
    const auto& A = *ws.module("A");
    const auto& L = *ws.module("L");
    for (const auto& x : A.carrier().elems)
      for (std::size_t a = 0; a < HF->size(); ++a) CHECK(P->power().block(mu(x), a) == HF->homs()[a](x));
    CHECK(mu(fx::el(A, "b")) == mu(fx::el(A, "c")));
    (void)L;
  }

  TEST_CASE("phi and nu are frame homs") {
    const auto& ws = two_instants();
    auto J = ws.frame("J");
    auto H = ws.fsl("H").fsl;
    auto L = ws.module("L");
    auto T = tensor(J, H);
    auto HJH = hom_frame(H, T->module());
    CHECK(frame_hom_violation(unit_phi(T, HJH)) == fx::ok());
    auto LJ = lazy_FJ(L, J);
    auto LJL = hom_frame(LJ, L);
    CHECK(frame_hom_violation(unit_nu(LJ, LJL)) == fx::ok());
    for (std::size_t i = 0; i < J->size(); ++i) {
      CHECK(is_module_hom(phi_point(T, i).as_map()));
      CHECK(is_module_hom(nu_point(LJ, L, i).as_map()));
    }
  }

  TEST_CASE("naturality with identity morphisms") {
    const auto& ws = two_instants();
    auto J = ws.frame("J");
    auto H = ws.fsl("H").fsl;
    auto L = ws.module("L");
    CHECK(naturality_eta(J, identity_fsl_map(H)) == fx::ok());
    CHECK(naturality_eps(J, identity_map(L)) == fx::ok());
    CHECK(naturality_phi(H, identity_frame_hom(J)) == fx::ok());
    CHECK(naturality_psi(H, identity_map(L)) == fx::ok());
    CHECK(naturality_nu(L, identity_frame_hom(J)) == fx::ok());
    CHECK(naturality_mu(L, identity_fsl_map(H)) == fx::ok());
  }

  TEST_CASE("naturality along example morphisms") {
    const auto& ws = two_instants();
    auto J = ws.frame("J");
    auto H = ws.fsl("H").fsl;
    auto A = ws.module("A"), L = ws.module("L");
    for (const auto& g : enumerate_module_homs(L, L)) {
      CHECK(naturality_eps(J, g.as_map()) == fx::ok());
      CHECK(naturality_psi(H, g.as_map()) == fx::ok());
    }
    for (const auto& h : enumerate_module_homs(A, A)) {
      FslMap f{H, H, h.as_map().fn};
      if (!is_lax_morphism(f)) continue;
      CHECK(naturality_eta(J, f) == fx::ok());
      CHECK(naturality_mu(L, f) == fx::ok());
    }
    auto one = fx::frame_of(ws.quantale("V"), {{0}});
    FrameHom t{one, J, {1}};
    REQUIRE(is_frame_hom(t));
    CHECK(naturality_phi(H, t) == fx::ok());
    CHECK(naturality_nu(L, t) == fx::ok());
  }

  TEST_CASE("a short generated run") {
    SuiteOptions opt;
    opt.count = 6;
    opt.threads = 1;
    auto rep = run_adjunction_suite(opt);
    require_clean(rep);
    CHECK(rep.checks.size() == 6 * 27);
  }
}

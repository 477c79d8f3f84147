#include <cmath>
#include <random>
#include <set>

#include "crisp_check.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace tensalg;

namespace {

std::set<Elem> carrier_set(const Module& M) { return {M.carrier().elems.begin(), M.carrier().elems.end()}; }

bool is_identity_on(const Module& M, const ModuleMap& f) {
  for (const auto& x : M.carrier().elems)
    if (f(x) != x) return false;
  return true;
}

}  // namespace

TEST_SUITE("functors") {
  TEST_CASE("delta and smear elements") {
    const auto& ws = fx::example();
    auto A = ws.module("A");
    auto V = ws.quantale("V");
    auto P = power_module(A, 3);
    auto J = fx::frame_of(V, {{1, 2, 0}, {0, 1, 2}, {2, 0, 1}});
    auto Z = fx::constant_frame(V, 3, 0);
    for (const auto& x : A->carrier().elems)
      for (std::size_t i = 0; i < 3; ++i) {
        Elem d = delta_element(*P, x, i);
        for (std::size_t k = 0; k < 3; ++k) CHECK(P->block(d, k) == (k == i ? x : A->bottom()));
        Elem s = smear_element(*P, *J, x, i);
        for (std::size_t k = 0; k < 3; ++k) CHECK(P->block(s, k) == A->act(J->r(i, k), x));
        CHECK(smear_element(*P, *Z, x, i) == P->bottom());
      }
    CHECK(delta_element(*P, A->bottom(), 1) == P->bottom());
    auto P1 = power_module(A, 1);
    for (const auto& x : A->carrier().elems) CHECK(delta_element(*P1, x, 0) == x);
    for (const auto& x : P->carrier().elems) {
      Elem acc = P->bottom();
      for (std::size_t i = 0; i < 3; ++i) acc = P->join(acc, delta_element(*P, P->block(x, i), i));
      CHECK(acc == x);
    }
  }

  TEST_CASE("degenerate tensors") {
    const auto& ws = fx::example();
    auto A = ws.module("A");
    auto V = ws.quantale("V");
    auto zeroF = validate_fsemilattice(A, {0, 0, 0, 0, 0});
    auto T0 = tensor(fx::constant_frame(V, 2, 0), zeroF);
    CHECK(T0->module()->carrier().size() == 25);
    auto T1 = tensor(fx::constant_frame(V, 1, 0), ws.fsl("H").fsl);
    CHECK(T1->module()->carrier().size() == 5);
    auto pairs = tensor_pairs(*fx::constant_frame(V, 2, 0), *zeroF, *power_module(A, 2));
    for (const auto& [c, d] : pairs) {
      CHECK(c == power_module(A, 2)->bottom());
      CHECK(d == power_module(A, 2)->bottom());
    }
  }

  TEST_CASE("tensor against the literal construction") {
    InstanceGenerator gen(13);
    int ran = 0;
    for (std::size_t k = 0; k < 12; ++k) {
      Instance in = gen.draw(k, 0);
      if (std::pow(static_cast<double>(in.H1->module()->carrier().size()), static_cast<double>(in.J1->size())) > 200)
        continue;
      auto T = tensor(in.J1, in.H1);
      auto lit = tensor_from_pairs(in.J1, in.H1);
      CHECK(carrier_set(*T->module()) == carrier_set(*lit.quotient.fsl->module()));
      CHECK(is_prenucleus(lit.prenucleus));
      CHECK(is_nucleus(lit.nucleus));
      CHECK(module_law_violation(*T->module()) == fx::ok());
      CHECK(module_hom_violation(T->projection()) == fx::ok());
      for (const auto& x : T->power()->carrier().elems) CHECK(T->nucleus(x) == lit.nucleus(x));
      ++ran;
    }
    CHECK(ran >= 4);
  }

  TEST_CASE("forward maps") {
    const auto& ws = fx::example();
    auto A = ws.module("A");
    auto V = ws.quantale("V");
    auto J = fx::frame_of(V, {{1, 2}, {0, 1}});
    CHECK(is_identity_on(*power_module(A, 2), forward_map(identity_frame_hom(J), A)));
    auto one = fx::frame_of(V, {{2}});
    auto f = forward_map(FrameHom{J, one, {0, 0}}, A);
    auto P = power_module(A, 2);
    for (const auto& x : P->carrier().elems) CHECK(f(x) == A->join(P->block(x, 0), P->block(x, 1)));
  }

  TEST_CASE("tensor on morphisms") {
    const auto& ws = fx::example();
    auto H = ws.fsl("H").fsl;
    auto V = ws.quantale("V");
    auto J = fx::frame_of(V, {{1, 2}, {0, 1}});
    auto T = tensor(J, H);
    CHECK(is_identity_on(*T->module(), tensor_frame_hom(identity_frame_hom(J), T, T)));
    CHECK(is_identity_on(*T->module(), tensor_lax_hom(identity_fsl_map(H), T, T)));
    CHECK(tensor_frame_square_violation(identity_frame_hom(J), T, T) == fx::ok());

    // J (x) (g o f) = (J (x) g) o (J (x) f) over lax endomorphisms of H
    auto A = ws.module("A");
    std::vector<FslMap> lax;
    for (const auto& h : enumerate_module_homs(A, A)) {
      FslMap m{H, H, h.as_map().fn};
      if (is_lax_morphism(m)) lax.push_back(m);
    }
    REQUIRE(lax.size() > 1);
    for (const auto& f : lax) {
      CHECK(tensor_lax_square_violation(f, T, T) == fx::ok());
      for (const auto& g : lax) {
        auto lhs = tensor_lax_hom(compose(g, f), T, T);
        auto rhs = compose(tensor_lax_hom(g, T, T), tensor_lax_hom(f, T, T));
        CHECK(maps_differ(lhs, rhs) == fx::ok());
      }
    }
  }

  TEST_CASE("hom frame of the example") {
    const auto& ws = fx::example();
    auto HF = hom_frame(ws.fsl("H").fsl, ws.module("L"));
    REQUIRE(HF->size() == 3);
    const auto& V = *ws.quantale("V");
    std::vector<std::vector<std::string>> r;
    for (std::size_t a = 0; a < 3; ++a) {
      std::vector<std::string> row;
      for (std::size_t b = 0; b < 3; ++b) row.push_back(V.label(HF->frame()->r(a, b)));
      r.push_back(row);
    }
    CHECK(r == std::vector<std::vector<std::string>>{{"1", "0", "0"}, {"1", "0", "0"}, {"1", "1", "0"}});
    // every entry equals the defining meet
    const auto& A = *ws.module("A");
    const auto& L = *ws.module("L");
    const auto& H = *ws.fsl("H").fsl;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) {
        int m = V.top();
        for (const auto& x : A.carrier().elems)
          m = V.meet(m, module_residuate(L, HF->homs()[b](x), HF->homs()[a](H.F(x))));
        CHECK(HF->frame()->r(a, b) == m);
        CHECK(hom_relation(H, L, HF->homs()[a].as_map(), HF->homs()[b].as_map()) == m);
      }
  }

  TEST_CASE("hom frame degenerate cases") {
    const auto& ws = fx::example();
    auto V = ws.quantale("V");
    auto HZ = hom_frame(ws.fsl("H").fsl, fx::trivial_module(V));
    REQUIRE(HZ->size() == 1);
    CHECK(HZ->frame()->r(0, 0) == V->top());
    for (const auto& Q : curated_quantales()) {
      auto S = self_module(Q);
      auto HF = hom_frame(identity_fsemilattice(S), S);
      for (std::size_t a = 0; a < HF->size(); ++a) CHECK(Q->leq(Q->unit(), HF->frame()->r(a, a)));
    }
  }

  TEST_CASE("hom frame on morphisms") {
    const auto& ws = fx::example();
    auto H = ws.fsl("H").fsl;
    auto A = ws.module("A"), L = ws.module("L");
    auto HL = hom_frame(H, L);
    auto HA = hom_frame(H, A);
    CHECK(hom_frame_covariant(identity_map(L), HL, HL) == identity_frame_hom(HL->frame()));
    CHECK(hom_frame_contravariant(identity_fsl_map(H), HL, HL) == identity_frame_hom(HL->frame()));
    auto LL = enumerate_module_homs(L, L);
    for (const auto& g : enumerate_module_homs(A, L)) {
      auto Jg = hom_frame_covariant(g.as_map(), HA, HL);
      CHECK(frame_hom_violation(Jg) == fx::ok());
      for (const auto& h : LL)
        CHECK(hom_frame_covariant(compose(h.as_map(), g.as_map()), HA, HL) ==
              compose_frame_homs(hom_frame_covariant(h.as_map(), HL, HL), Jg));
    }
    std::vector<FslMap> lax;
    for (const auto& h : enumerate_module_homs(A, A)) {
      FslMap m{H, H, h.as_map().fn};
      if (is_lax_morphism(m)) lax.push_back(m);
    }
    for (const auto& f : lax) {
      CHECK(frame_hom_violation(hom_frame_contravariant(f, HL, HL)) == fx::ok());
      for (const auto& g : lax)
        CHECK(hom_frame_contravariant(compose(g, f), HL, HL) ==
              compose_frame_homs(hom_frame_contravariant(f, HL, HL), hom_frame_contravariant(g, HL, HL)));
    }
  }

  TEST_CASE("crisp degeneration") {
    auto V = two_quantale();
    InstanceGenerator gen(17);
    std::mt19937_64 rng(17);
    auto ms = curated_modules(V);
    std::uniform_int_distribution<std::size_t> mp(0, ms.size() - 1), np(1, 3);
    for (int k = 0; k < 10; ++k) {
      auto A = ms[mp(rng)];
      auto L = ms[mp(rng)];
      auto J = gen.random_frame(rng, V, np(rng), "J");
      auto H = gen.random_fsl(rng, A, "H");
      CHECK(crisp::FJ_mismatch(A, J) == fx::ok());
      CHECK(crisp::tensor_mismatch(H, *A, J) == fx::ok());
      CHECK(crisp::hom_frame_mismatch(H, *A, L) == fx::ok());
    }
  }
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tensalg/functors.hpp"

namespace tensalg {

struct CheckResult {
  std::string name;
  std::string instance;
  bool pass = true;
  std::string witness;
};

struct CheckReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  std::size_t rejections = 0;  // generator draws discarded for size

  void add(std::string name, std::string instance, const std::optional<std::string>& violation);
  void merge(const CheckReport& other);
  std::size_t passed() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

// ---- units and counits ----

// eta_H(x)(i) = n(x_{i=}) : H -> (J (x) H)^J.
FslMap unit_eta(TensorPtr JH);
// e_L(xbar) = join_i xbar(i)(i) on (L^T)^T; JLJ must be tensor(J, L^J).
ModuleMap counit_e(TensorPtr JLJ);
// eps_L: J (x) L^J -> L, the restriction of e_L to fixed points.
ModuleMap counit_eps(TensorPtr JLJ);
std::optional<std::string> eps_factorization_violation(TensorPtr JLJ);

// phi_J(i) = (x |-> n(x_{i=})) as a point of J[H, J (x) H].
ModuleHom phi_point(TensorPtr JH, std::size_t i);
FrameHom unit_phi(TensorPtr JH, HomFramePtr HJH);
// f_L(x) = join_alpha alpha(x(alpha)) on A^{points}; T must be tensor(J[H,L], H).
ModuleMap counit_f(HomFramePtr HL, TensorPtr T);
ModuleMap counit_psi(HomFramePtr HL, TensorPtr T);
std::optional<std::string> psi_factorization_violation(HomFramePtr HL, TensorPtr T);

// nu_J(i) = evaluation at i, a point of J[L^J, L].
ModuleHom nu_point(PowerFslPtr LJ, ModulePtr L, std::size_t i);
FrameHom unit_nu(PowerFslPtr LJ, HomFramePtr LJL);
// mu_H(x)(alpha) = alpha(x) : H -> L^{J[H,L]}.
FslMap unit_mu(HomFramePtr HL);

// ---- triangle identities ----

CheckReport check_triangles_adjunction1(FramePtr J, FslPtr H, ModulePtr L, const std::string& tag = "");
CheckReport check_triangles_adjunction2(FramePtr J, FslPtr H, ModulePtr L, const std::string& tag = "");
CheckReport check_triangles_adjunction3(FramePtr J, FslPtr H, ModulePtr L, const std::string& tag = "");

// ---- naturality squares ----

enum class NaturalityKind { Eta, Eps, Phi, Psi, Nu, Mu };
const char* to_string(NaturalityKind k);

std::optional<std::string> naturality_eta(FramePtr J, const FslMap& f);
std::optional<std::string> naturality_eps(FramePtr J, const ModuleMap& g);
std::optional<std::string> naturality_phi(FslPtr H, const FrameHom& t);
std::optional<std::string> naturality_psi(FslPtr H, const ModuleMap& g);
std::optional<std::string> naturality_nu(ModulePtr L, const FrameHom& t);
std::optional<std::string> naturality_mu(ModulePtr L, const FslMap& f);

// ---- component validators ----

CheckReport validate_components(FramePtr J, FslPtr H, ModulePtr L, const std::string& tag = "");

}  // namespace tensalg

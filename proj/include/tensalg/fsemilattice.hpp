#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "tensalg/frame.hpp"
#include "tensalg/module.hpp"

namespace tensalg {

// (A, F) with F a module endomorphism of A.
class FSemilattice {
 public:
  FSemilattice(ModulePtr m, std::string name) : module_(std::move(m)), name_(std::move(name)) {}
  virtual ~FSemilattice() = default;
  FSemilattice(const FSemilattice&) = delete;
  FSemilattice& operator=(const FSemilattice&) = delete;

  const ModulePtr& module() const { return module_; }
  const Quantale& quantale() const { return module_->quantale(); }
  const std::string& name() const { return name_; }
  virtual Elem F(const Elem& x) const = 0;
  // Largest x with F(x) <= y (F preserves joins, so this exists).
  virtual Elem F_upper(const Elem& y) const;
  ModuleMap F_map() const;

 private:
  ModulePtr module_;
  std::string name_;
};

using FslPtr = std::shared_ptr<const FSemilattice>;

class FunctionFSemilattice final : public FSemilattice {
 public:
  FunctionFSemilattice(ModulePtr m, std::function<Elem(const Elem&)> F, std::string name)
      : FSemilattice(std::move(m), std::move(name)), F_(std::move(F)) {}
  Elem F(const Elem& x) const override { return F_(x); }
  Elem F_upper(const Elem& y) const override;

 private:
  std::function<Elem(const Elem&)> F_;
  mutable std::once_flag once_;
  mutable std::vector<Elem> upper_;
};

// (A^T, F^J) with (F^J x)(i) = join_k r(i,k) * x(k).
class PowerFSemilattice final : public FSemilattice {
 public:
  PowerFSemilattice(std::shared_ptr<const PowerModule> P, FramePtr J, std::string name);
  const PowerModule& power() const { return *power_; }
  const ModulePtr& base() const { return power_->base(); }
  const FramePtr& frame() const { return frame_; }
  Elem F(const Elem& x) const override;
  Elem F_upper(const Elem& y) const override;

 private:
  std::shared_ptr<const PowerModule> power_;
  FramePtr frame_;
};

using PowerFslPtr = std::shared_ptr<const PowerFSemilattice>;

// Explicit F table (indices into the table module's carrier).
FslPtr validate_fsemilattice(TableModulePtr M, const std::vector<int>& F, std::string name = "H");
// Validation of an arbitrary F-semilattice: nullopt iff F is a module endomorphism.
std::optional<std::string> fsemilattice_violation(const FSemilattice& H);
FslPtr make_fsemilattice(ModulePtr M, std::function<Elem(const Elem&)> F, std::string name);
FslPtr identity_fsemilattice(ModulePtr M);

struct FslMap {
  FslPtr source;
  FslPtr target;
  std::function<Elem(const Elem&)> fn;
  Elem operator()(const Elem& x) const { return fn(x); }
  ModuleMap as_module_map() const { return ModuleMap{source->module(), target->module(), fn}; }
};

FslMap identity_fsl_map(FslPtr H);
FslMap compose(const FslMap& g, const FslMap& f);

std::optional<std::string> f_hom_violation(const FslMap& f);
std::optional<std::string> lax_violation(const FslMap& f);
bool is_f_hom(const FslMap& f);
bool is_lax_morphism(const FslMap& f);

// Re-validates F^J; capped.
PowerFslPtr construct_FJ(ModulePtr A, FramePtr J);
// Same object without enumeration or validation; used for nested constructions.
PowerFslPtr lazy_FJ(ModulePtr A, FramePtr J);

// f^J : A1^J -> A2^J, (f^J x)(i) = f(x(i)).
FslMap lift_hom_FJ(const ModuleMap& f, PowerFslPtr src, PowerFslPtr dst);
FslMap lift_hom_FJ(const ModuleMap& f, FramePtr J);

// A^t : A^{J2} -> A^{J1}, (A^t x)(i) = x(t(i)).
FslMap restrict_along_frame_hom(const FrameHom& t, PowerFslPtr src_J2, PowerFslPtr dst_J1);
FslMap restrict_along_frame_hom(const FrameHom& t, ModulePtr A);

}  // namespace tensalg

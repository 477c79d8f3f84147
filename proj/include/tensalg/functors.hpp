#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tensalg/fsemilattice.hpp"
#include "tensalg/nucleus.hpp"

namespace tensalg {

// x_{i=}: x at position i, bottom elsewhere.
Elem delta_element(const PowerModule& P, const Elem& x, std::size_t i);
// x_{ir}: position k holds r(i,k) * x.
Elem smear_element(const PowerModule& P, const VFrame& J, const Elem& x, std::size_t i);

// The generating pairs (x_{ir} v F(x)_{i=}, F(x)_{i=}) over every x and i.
PairSet tensor_pairs(const VFrame& J, const FSemilattice& H, const PowerModule& P);

// J (x) H as the fixed points of n(j[J,H]) inside A^T. The nucleus is
// evaluated per tuple: with m_i the largest x such that F(x) <= a(i),
// j(a)(k) = a(k) v join_i r(i,k) * m_i, iterated to stability. Nothing is
// enumerated until a carrier is requested.
class TensorModule {
 public:
  TensorModule(FramePtr J, FslPtr H);

  const FramePtr& frame() const { return frame_; }
  const FslPtr& fsl() const { return fsl_; }
  const std::shared_ptr<const PowerModule>& power() const { return power_; }
  const std::shared_ptr<const QuotientModule>& quotient() const { return quotient_; }
  ModulePtr module() const { return quotient_; }

  Elem prenucleus(const Elem& a) const;
  Elem nucleus(const Elem& a) const;
  ModuleMap projection() const;

 private:
  FramePtr frame_;
  FslPtr fsl_;
  std::shared_ptr<const PowerModule> power_;
  std::shared_ptr<const QuotientModule> quotient_;
};

using TensorPtr = std::shared_ptr<const TensorModule>;

TensorPtr tensor(FramePtr J, FslPtr H);

// The same object built literally: materialize A^T, form [J,H], saturate,
// take j[[J,H]] and its closure, quotient. The power carries F = identity
// (the construction is a quotient of plain modules).
struct LiteralTensor {
  FslPtr power;
  PairSet pairs;
  EndoOperator prenucleus;
  EndoOperator nucleus;
  Quotient quotient;
};

LiteralTensor tensor_from_pairs(FramePtr J, FslPtr H);

// f^->(x)(k) = join{ x(i) | f(i) = k }.
ModuleMap forward_map(const FrameHom& f, ModulePtr A);

// p |-> n2(f^->(p)) : J1 (x) H -> J2 (x) H.
ModuleMap tensor_frame_hom(const FrameHom& f, TensorPtr T1, TensorPtr T2);
// p |-> n2(f^J(p)) : J (x) H1 -> J (x) H2.
ModuleMap tensor_lax_hom(const FslMap& f, TensorPtr T1, TensorPtr T2);

// The defining squares, checked on every element of the power carrier.
std::optional<std::string> tensor_frame_square_violation(const FrameHom& f, TensorPtr T1, TensorPtr T2);
std::optional<std::string> tensor_lax_square_violation(const FslMap& f, TensorPtr T1, TensorPtr T2);

// J[H,L]: points are the module homs A -> L, r(a,b) = meet_x (b(x) -> a(F(x))).
class HomFrame {
 public:
  HomFrame(FslPtr H, ModulePtr L);

  const FslPtr& fsl() const { return fsl_; }
  const ModulePtr& target() const { return target_; }
  const std::vector<ModuleHom>& homs() const { return homs_; }
  const FramePtr& frame() const { return frame_; }
  std::size_t size() const { return homs_.size(); }
  std::optional<std::size_t> find(const ModuleHom& h) const;
  std::size_t index_of(const ModuleHom& h) const;

 private:
  FslPtr fsl_;
  ModulePtr target_;
  std::vector<ModuleHom> homs_;
  std::map<std::vector<Elem>, std::size_t> index_;
  FramePtr frame_;
};

using HomFramePtr = std::shared_ptr<const HomFrame>;

HomFramePtr hom_frame(FslPtr H, ModulePtr L);
// r entry computed directly from two homs (used for points outside an enumerated frame).
int hom_relation(const FSemilattice& H, const Module& L, const ModuleMap& alpha, const ModuleMap& beta);

// J[H,f] : alpha |-> f o alpha.
FrameHom hom_frame_covariant(const ModuleMap& f, HomFramePtr src, HomFramePtr dst);
// J[f,L] : alpha |-> alpha o f, from J[H2,L] to J[H1,L].
FrameHom hom_frame_contravariant(const FslMap& f, HomFramePtr src_H2, HomFramePtr dst_H1);

}  // namespace tensalg

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tensalg/lattice.hpp"

namespace tensalg {

class Quantale;
using QuantalePtr = std::shared_ptr<const Quantale>;

// Unital quantale (V, join, tensor, unit) on a finite lattice.
class Quantale {
 public:
  const std::string& name() const { return name_; }
  const FinLattice& lattice() const { return lattice_; }
  std::size_t size() const { return lattice_.size(); }
  int mul(int a, int b) const { return tensor_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)]; }
  int unit() const { return unit_; }
  bool commutative() const { return commutative_; }
  int bottom() const { return lattice_.bottom(); }
  int top() const { return lattice_.top(); }
  bool leq(int a, int b) const { return lattice_.leq(a, b); }
  int join(int a, int b) const { return lattice_.join(a, b); }
  int meet(int a, int b) const { return lattice_.meet(a, b); }
  const std::string& label(int a) const { return lattice_.label(a); }

 private:
  friend QuantalePtr validate_quantale(FinLattice, const std::vector<std::vector<int>>&, int, std::string);
  std::string name_;
  FinLattice lattice_;
  std::vector<int> tensor_;
  int unit_ = 0;
  bool commutative_ = true;
};

QuantalePtr validate_quantale(FinLattice lattice, const std::vector<std::vector<int>>& tensor, int unit,
                              std::string name = "V");

// hom(u, w) = join of all v with v (x) u <= w.
int residuate(const Quantale& Q, int u, int w);

bool is_commutative(const Quantale& Q);

void require_commutative(const Quantale& Q, const std::string& where);

}  // namespace tensalg

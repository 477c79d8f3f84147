#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tensalg {

// Finite complete join-semilattice on indices 0..n-1 (input order).
class FinLattice {
 public:
  FinLattice() = default;

  std::size_t size() const { return n_; }
  bool leq(int a, int b) const { return leq_[idx(a, b)] != 0; }
  int join(int a, int b) const { return join_[idx(a, b)]; }
  int meet(int a, int b) const;
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int a) const { return labels_.at(static_cast<std::size_t>(a)); }
  std::optional<int> find(const std::string& label) const;

  // Trusted constructor for derived carriers whose tables come from a known
  // lattice (powers, quotients). Row-major n*n tables.
  static FinLattice from_tables_unchecked(std::vector<std::string> labels, std::vector<char> leq,
                                          std::vector<int> join, int bottom, int top);

 private:
  friend FinLattice validate_lattice(std::vector<std::string>, const std::vector<std::vector<bool>>&);
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b); }
  void derive_tables();

  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<char> leq_;
  std::vector<int> join_;
  std::vector<int> meet_;  // filled for validated lattices only
  int bottom_ = 0;
  int top_ = 0;
};

using ElemSubset = std::vector<int>;

FinLattice validate_lattice(std::vector<std::string> elements, const std::vector<std::vector<bool>>& leq);

int join(const FinLattice& L, std::span<const int> s);
int meet(const FinLattice& L, std::span<const int> s);

// x != bottom and x != join of the elements strictly below x.
ElemSubset join_irreducibles(const FinLattice& L);

// All maps L1 -> L2 preserving every join (bottom included), sorted
// lexicographically by value vector.
std::vector<std::vector<int>> enumerate_join_preserving_maps(const FinLattice& L1, const FinLattice& L2);

}  // namespace tensalg

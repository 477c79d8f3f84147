#include "tensalg/quantale.hpp"

#include "tensalg/error.hpp"

namespace tensalg {

QuantalePtr validate_quantale(FinLattice lattice, const std::vector<std::vector<int>>& tensor, int unit,
                              std::string name) {
  const int n = static_cast<int>(lattice.size());
  if (static_cast<int>(tensor.size()) != n) fail(ErrorKind::BadElementIndex, "tensor table has wrong number of rows");
  for (const auto& row : tensor) {
    if (static_cast<int>(row.size()) != n) fail(ErrorKind::BadElementIndex, "tensor table row has wrong length");
    for (int x : row)
      if (x < 0 || x >= n) fail(ErrorKind::BadElementIndex, "tensor entry " + std::to_string(x) + " out of range");
  }
  if (unit < 0 || unit >= n) fail(ErrorKind::BadElementIndex, "unit out of range");

  auto q = std::make_shared<Quantale>();
  q->name_ = std::move(name);
  q->lattice_ = std::move(lattice);
  q->tensor_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) q->tensor_[static_cast<std::size_t>(a) * n + b] = tensor[a][b];
  q->unit_ = unit;
  const Quantale& Q = *q;
  auto lbl = [&](int x) { return Q.label(x); };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (Q.mul(Q.mul(a, b), c) != Q.mul(a, Q.mul(b, c)))
          fail(ErrorKind::NotAssociative, "(" + lbl(a) + ", " + lbl(b) + ", " + lbl(c) + ")");
  const int z = Q.bottom();
  for (int a = 0; a < n; ++a) {
    if (Q.mul(a, z) != z) fail(ErrorKind::NotJoinDistributive, lbl(a) + " (x) 0 != 0");
    if (Q.mul(z, a) != z) fail(ErrorKind::NotJoinDistributive, "0 (x) " + lbl(a) + " != 0");
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (Q.mul(a, Q.join(b, c)) != Q.join(Q.mul(a, b), Q.mul(a, c)))
          fail(ErrorKind::NotJoinDistributive, "left: (" + lbl(a) + ", " + lbl(b) + ", " + lbl(c) + ")");
        if (Q.mul(Q.join(b, c), a) != Q.join(Q.mul(b, a), Q.mul(c, a)))
          fail(ErrorKind::NotJoinDistributive, "right: (" + lbl(a) + ", " + lbl(b) + ", " + lbl(c) + ")");
      }
  }
  for (int a = 0; a < n; ++a)
    if (Q.mul(a, unit) != a || Q.mul(unit, a) != a) fail(ErrorKind::UnitLawFails, "at " + lbl(a));
  q->commutative_ = is_commutative(Q);
  return q;
}

int residuate(const Quantale& Q, int u, int w) {
  int acc = Q.bottom();
  for (int v = 0; v < static_cast<int>(Q.size()); ++v)
    if (Q.leq(Q.mul(v, u), w)) acc = Q.join(acc, v);
  return acc;
}

bool is_commutative(const Quantale& Q) {
  const int n = static_cast<int>(Q.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (Q.mul(a, b) != Q.mul(b, a)) return false;
  return true;
}

void require_commutative(const Quantale& Q, const std::string& where) {
  if (!Q.commutative()) fail(ErrorKind::NonCommutativeBase, where + " needs a commutative quantale, " + Q.name() + " is not");
}

}  // namespace tensalg

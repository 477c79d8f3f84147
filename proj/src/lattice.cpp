#include "tensalg/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "tensalg/error.hpp"

namespace tensalg {

std::optional<int> FinLattice::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

void FinLattice::derive_tables() {
  const int n = static_cast<int>(n_);
  join_.assign(n_ * n_, -1);
  bottom_ = -1;
  top_ = -1;
  for (int x = 0; x < n; ++x) {
    bool is_bottom = true, is_top = true;
    for (int y = 0; y < n; ++y) {
      is_bottom = is_bottom && leq(x, y);
      is_top = is_top && leq(y, x);
    }
    if (is_bottom) bottom_ = x;
    if (is_top) top_ = x;
  }
  if (bottom_ < 0) fail(ErrorKind::MissingJoin, "the empty set has no join (no least element)");
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      int best = -1;
      for (int u = 0; u < n; ++u) {
        if (!leq(a, u) || !leq(b, u)) continue;
        if (best < 0 || leq(u, best)) best = u;
      }
      if (best >= 0) {
        for (int u = 0; u < n; ++u)
          if (leq(a, u) && leq(b, u) && !leq(best, u)) best = -1;
      }
      if (best < 0) fail(ErrorKind::MissingJoin, "{" + labels_[a] + ", " + labels_[b] + "} has no least upper bound");
      join_[idx(a, b)] = join_[idx(b, a)] = best;
    }
  }
}

int FinLattice::meet(int a, int b) const {
  if (!meet_.empty()) return meet_[idx(a, b)];
  int m = bottom_;
  for (int u = 0; u < static_cast<int>(n_); ++u)
    if (leq(u, a) && leq(u, b)) m = join_[idx(m, u)];
  return m;
}

FinLattice validate_lattice(std::vector<std::string> elements, const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = elements.size();
  if (n == 0) fail(ErrorKind::MissingJoin, "empty carrier has no bottom");
  if (leq.size() != n) fail(ErrorKind::BadElementIndex, "leq table has wrong number of rows");
  for (const auto& row : leq)
    if (row.size() != n) fail(ErrorKind::BadElementIndex, "leq table row has wrong length");
  check_carrier_size(n, "lattice");

  FinLattice L;
  L.n_ = n;
  L.labels_ = std::move(elements);
  L.leq_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) L.leq_[a * n + b] = leq[a][b] ? 1 : 0;

  const int m = static_cast<int>(n);
  for (int a = 0; a < m; ++a)
    if (!L.leq(a, a)) fail(ErrorKind::NotAPartialOrder, "not reflexive at " + L.labels_[a]);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (L.leq(a, b) && L.leq(b, a))
        fail(ErrorKind::NotAPartialOrder, "not antisymmetric at (" + L.labels_[a] + ", " + L.labels_[b] + ")");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!L.leq(a, b)) continue;
      for (int c = 0; c < m; ++c)
        if (L.leq(b, c) && !L.leq(a, c))
          fail(ErrorKind::NotAPartialOrder,
               "not transitive at (" + L.labels_[a] + ", " + L.labels_[b] + ", " + L.labels_[c] + ")");
    }
  L.derive_tables();
  std::vector<int> mt(n * n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) mt[L.idx(a, b)] = L.meet(a, b);
  L.meet_ = std::move(mt);
  return L;
}

FinLattice FinLattice::from_tables_unchecked(std::vector<std::string> labels, std::vector<char> leq,
                                             std::vector<int> join, int bottom, int top) {
  FinLattice L;
  L.n_ = labels.size();
  L.labels_ = std::move(labels);
  L.leq_ = std::move(leq);
  L.join_ = std::move(join);
  L.bottom_ = bottom;
  L.top_ = top;
  return L;
}

int join(const FinLattice& L, std::span<const int> s) {
  int acc = L.bottom();
  for (int x : s) acc = L.join(acc, x);
  return acc;
}

int meet(const FinLattice& L, std::span<const int> s) {
  int acc = L.top();
  for (int x : s) acc = L.meet(acc, x);
  return acc;
}

ElemSubset join_irreducibles(const FinLattice& L) {
  ElemSubset out;
  const int n = static_cast<int>(L.size());
  for (int x = 0; x < n; ++x) {
    if (x == L.bottom()) continue;
    int below = L.bottom();
    for (int y = 0; y < n; ++y)
      if (y != x && L.leq(y, x)) below = L.join(below, y);
    if (below != x) out.push_back(x);
  }
  return out;
}

namespace detail {
std::vector<std::vector<int>> enumerate_hom_tables(const FinLattice& S, const FinLattice& T, std::size_t nv,
                                                   const std::vector<int>* act_s, const std::vector<int>* act_t);
}

std::vector<std::vector<int>> enumerate_join_preserving_maps(const FinLattice& L1, const FinLattice& L2) {
  return detail::enumerate_hom_tables(L1, L2, 0, nullptr, nullptr);
}

namespace detail {

// Backtracking over join-irreducibles in a linear extension. Each element of
// S is determined once every join-irreducible below it is assigned; binary
// join pairs and action pairs are checked at the step their last member
// becomes determined.
std::vector<std::vector<int>> enumerate_hom_tables(const FinLattice& S, const FinLattice& T, std::size_t nv,
                                                   const std::vector<int>* act_s, const std::vector<int>* act_t) {
  const int n1 = static_cast<int>(S.size());
  const int n2 = static_cast<int>(T.size());
  ElemSubset jis = join_irreducibles(S);
  auto height = [&](int x) {
    int c = 0;
    for (int y = 0; y < n1; ++y) c += S.leq(y, x) ? 1 : 0;
    return c;
  };
  std::stable_sort(jis.begin(), jis.end(), [&](int a, int b) { return height(a) < height(b); });
  const int k = static_cast<int>(jis.size());

  std::vector<int> det(static_cast<std::size_t>(n1), 0);
  std::vector<std::vector<int>> below(static_cast<std::size_t>(n1));
  for (int x = 0; x < n1; ++x)
    for (int p = 0; p < k; ++p)
      if (S.leq(jis[p], x)) {
        below[x].push_back(p);
        det[x] = p + 1;
      }

  std::vector<std::vector<int>> fresh(static_cast<std::size_t>(k + 1));
  for (int x = 0; x < n1; ++x) fresh[det[x]].push_back(x);
  std::vector<std::vector<std::pair<int, int>>> join_checks(static_cast<std::size_t>(k + 1));
  for (int x = 0; x < n1; ++x)
    for (int y = x + 1; y < n1; ++y) {
      int z = S.join(x, y);
      if (z == x || z == y) continue;
      join_checks[std::max({det[x], det[y], det[z]})].emplace_back(x, y);
    }
  std::vector<std::vector<std::pair<int, int>>> act_checks(static_cast<std::size_t>(k + 1));
  if (nv > 0)
    for (std::size_t v = 0; v < nv; ++v)
      for (int x = 0; x < n1; ++x) {
        int vx = (*act_s)[v * static_cast<std::size_t>(n1) + x];
        act_checks[std::max(det[x], det[vx])].emplace_back(static_cast<int>(v), x);
      }
  // jis below each ji (for monotone candidate pruning)
  std::vector<std::vector<int>> ji_below(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p)
    for (int q = 0; q < p; ++q)
      if (S.leq(jis[q], jis[p])) ji_below[p].push_back(q);

  std::vector<int> g(static_cast<std::size_t>(k), T.bottom());
  std::vector<int> f(static_cast<std::size_t>(n1), T.bottom());
  std::vector<std::vector<int>> out;

  auto settle = [&](int step) -> bool {
    for (int x : fresh[step]) {
      int acc = T.bottom();
      for (int p : below[x]) acc = T.join(acc, g[p]);
      f[x] = acc;
    }
    for (auto [x, y] : join_checks[step])
      if (f[S.join(x, y)] != T.join(f[x], f[y])) return false;
    for (auto [v, x] : act_checks[step]) {
      int vx = (*act_s)[static_cast<std::size_t>(v) * n1 + x];
      if (f[vx] != (*act_t)[static_cast<std::size_t>(v) * n2 + f[x]]) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int p) -> void {
    if (p == k) {
      out.push_back(f);
      return;
    }
    for (int y = 0; y < n2; ++y) {
      bool mono = true;
      for (int q : ji_below[p])
        if (!T.leq(g[q], y)) {
          mono = false;
          break;
        }
      if (!mono) continue;
      g[p] = y;
      if (settle(p + 1)) self(self, p + 1);
    }
  };
  if (settle(0)) rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

}  // namespace tensalg

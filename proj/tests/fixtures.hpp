#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tensalg/error.hpp"
#include "tensalg/generator.hpp"
#include "tensalg/paper_example.hpp"
#include "tensalg/workspace.hpp"

namespace fx {

using namespace tensalg;

inline FinLattice chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a) {
    labels.push_back("c" + std::to_string(a));
    for (int b = 0; b < n; ++b) le[a][b] = a <= b;
  }
  return validate_lattice(labels, le);
}

// 0 < a, b, c < 1
inline FinLattice m3() {
  std::vector<std::vector<bool>> le(5, std::vector<bool>(5, false));
  for (int x = 0; x < 5; ++x) {
    le[0][x] = le[x][4] = le[x][x] = true;
  }
  return validate_lattice({"0", "a", "b", "c", "1"}, le);
}

// 0 < a < b < 1 and 0 < c < 1
inline FinLattice n5() {
  std::vector<std::vector<bool>> le(5, std::vector<bool>(5, false));
  for (int x = 0; x < 5; ++x) le[0][x] = le[x][4] = le[x][x] = true;
  le[1][2] = true;
  return validate_lattice({"0", "a", "b", "c", "1"}, le);
}

inline const Workspace& example() {
  static const Workspace ws = parse_workspace(paper_example_json());
  return ws;
}

inline int lab(const FinLattice& L, const std::string& s) { return *L.find(s); }

inline Elem el(const Module& M, const std::string& label) {
  for (const auto& x : M.carrier().elems)
    if (M.format(x) == label) return x;
  throw std::runtime_error("no element " + label);
}

inline FramePtr frame_of(QuantalePtr V, const std::vector<std::vector<int>>& r) {
  std::vector<std::string> pts;
  for (std::size_t i = 0; i < r.size(); ++i) pts.push_back("t" + std::to_string(i));
  return validate_frame(V, pts, r);
}

inline FramePtr constant_frame(QuantalePtr V, std::size_t n, int v) {
  return frame_of(V, std::vector<std::vector<int>>(n, std::vector<int>(n, v)));
}

// The one-element module over V.
inline TableModulePtr trivial_module(QuantalePtr V) {
  return validate_module(V, validate_lattice({"0"}, {{true}}),
                         std::vector<std::vector<int>>(V->size(), std::vector<int>{0}), "Z");
}

inline std::optional<std::string> ok() { return std::nullopt; }

// ValidationError stands for "nothing was thrown".
inline ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const AlgebraError& e) {
    return e.kind();
  }
  return ErrorKind::ValidationError;
}

}  // namespace fx

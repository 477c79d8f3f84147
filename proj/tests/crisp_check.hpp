#pragma once

// Library constructions over the two-element quantale compared with the
// Boolean-relation reference in oracles.hpp.

#include <optional>
#include <set>
#include <string>

#include "oracles.hpp"
#include "tensalg/functors.hpp"

namespace crisp {

using namespace tensalg;

inline std::optional<std::string> FJ_mismatch(TableModulePtr A, FramePtr J) {
  const auto P = oracle::raw(*A).P;
  const auto S = oracle::crisp_relation(*J);
  auto AJ = construct_FJ(A, J);
  const auto& elems = AJ->module()->carrier().elems;
  if (elems.size() != oracle::all_tuples(P.n, J->size()).size()) return "carrier size differs";
  for (const auto& x : elems)
    if (AJ->F(x) != oracle::crisp_FJ(P, S, x)) return "F^J differs at " + AJ->module()->format(x);
  return std::nullopt;
}

inline std::optional<std::string> tensor_mismatch(FslPtr H, const TableModule& A, FramePtr J) {
  std::vector<int> F;
  for (int x = 0; x < static_cast<int>(A.size()); ++x) F.push_back(H->F(Elem{x})[0]);
  auto want = oracle::crisp_tensor(oracle::raw(A).P, F, oracle::crisp_relation(*J));
  auto T = tensor(J, H);
  const auto& elems = T->module()->carrier().elems;
  std::set<oracle::Tuple> got(elems.begin(), elems.end());
  if (got != want)
    return "tensor carrier: library " + std::to_string(got.size()) + " elements, reference " +
           std::to_string(want.size());
  return std::nullopt;
}

inline std::optional<std::string> hom_frame_mismatch(FslPtr H, const TableModule& A, TableModulePtr L) {
  std::vector<int> F;
  for (int x = 0; x < static_cast<int>(A.size()); ++x) F.push_back(H->F(Elem{x})[0]);
  auto want = oracle::crisp_hom_frame(oracle::raw(A).P, F, oracle::raw(*L).P);
  auto HF = hom_frame(H, L);
  std::vector<std::vector<int>> pts;
  for (const auto& h : HF->homs()) {
    std::vector<int> row;
    for (const auto& y : h.values) row.push_back(y[0]);
    pts.push_back(row);
  }
  std::vector<std::size_t> pos(pts.size());
  for (std::size_t p = 0; p < pts.size(); ++p) {
    auto it = std::find(want.points.begin(), want.points.end(), pts[p]);
    if (it == want.points.end()) return "library point not a join map";
    pos[p] = static_cast<std::size_t>(it - want.points.begin());
  }
  if (pts.size() != want.points.size()) return "point count differs";
  const int top = H->quantale().top(), bot = H->quantale().bottom();
  for (std::size_t p = 0; p < pts.size(); ++p)
    for (std::size_t q = 0; q < pts.size(); ++q)
      if (HF->frame()->r(p, q) != (want.S[pos[p]][pos[q]] ? top : bot))
        return "r differs at (" + std::to_string(p) + "," + std::to_string(q) + ")";
  return std::nullopt;
}

}  // namespace crisp

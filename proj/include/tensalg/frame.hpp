#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tensalg/quantale.hpp"

namespace tensalg {

// V-frame (T, r): r is a V-valued relation with no axioms imposed.
class VFrame {
 public:
  VFrame(QuantalePtr q, std::vector<std::string> points, std::vector<int> r, std::string name);

  const Quantale& quantale() const { return *q_; }
  const QuantalePtr& quantale_ptr() const { return q_; }
  const std::string& name() const { return name_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::string>& points() const { return points_; }
  int r(std::size_t i, std::size_t j) const { return r_[i * points_.size() + j]; }
  const std::vector<int>& table() const { return r_; }

 private:
  QuantalePtr q_;
  std::vector<std::string> points_;
  std::vector<int> r_;
  std::string name_;
};

using FramePtr = std::shared_ptr<const VFrame>;

FramePtr validate_frame(QuantalePtr q, std::vector<std::string> points, const std::vector<std::vector<int>>& r,
                        std::string name = "J");

struct FrameHom {
  FramePtr source;
  FramePtr target;
  std::vector<std::size_t> map;
  std::size_t operator()(std::size_t i) const { return map[i]; }
  bool operator==(const FrameHom& o) const { return map == o.map; }
};

std::optional<std::string> frame_hom_violation(const FrameHom& f);
bool is_frame_hom(const FrameHom& f);
FrameHom compose_frame_homs(const FrameHom& g, const FrameHom& f);
FrameHom identity_frame_hom(FramePtr J);

}  // namespace tensalg

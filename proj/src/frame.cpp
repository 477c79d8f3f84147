#include "tensalg/frame.hpp"

#include "tensalg/error.hpp"

namespace tensalg {

VFrame::VFrame(QuantalePtr q, std::vector<std::string> points, std::vector<int> r, std::string name)
    : q_(std::move(q)), points_(std::move(points)), r_(std::move(r)), name_(std::move(name)) {}

FramePtr validate_frame(QuantalePtr q, std::vector<std::string> points, const std::vector<std::vector<int>>& r,
                        std::string name) {
  const std::size_t n = points.size();
  if (r.size() != n) fail(ErrorKind::BadElementIndex, "r table needs one row per point");
  std::vector<int> flat;
  flat.reserve(n * n);
  for (const auto& row : r) {
    if (row.size() != n) fail(ErrorKind::BadElementIndex, "r row has wrong length");
    for (int v : row) {
      if (v < 0 || v >= static_cast<int>(q->size()))
        fail(ErrorKind::BadElementIndex, "r entry " + std::to_string(v) + " is not an element of " + q->name());
      flat.push_back(v);
    }
  }
  return std::make_shared<VFrame>(std::move(q), std::move(points), std::move(flat), std::move(name));
}

std::optional<std::string> frame_hom_violation(const FrameHom& f) {
  const VFrame& J1 = *f.source;
  const VFrame& J2 = *f.target;
  if (J1.quantale_ptr() != J2.quantale_ptr())
    fail(ErrorKind::QuantaleMismatch, J1.name() + " and " + J2.name() + " use different quantales");
  if (f.map.size() != J1.size()) fail(ErrorKind::BadElementIndex, "frame map is not total");
  for (std::size_t t : f.map)
    if (t >= J2.size()) fail(ErrorKind::BadElementIndex, "frame map leaves the target");
  const Quantale& Q = J1.quantale();
  for (std::size_t i = 0; i < J1.size(); ++i)
    for (std::size_t j = 0; j < J1.size(); ++j)
      if (!Q.leq(J1.r(i, j), J2.r(f(i), f(j))))
        return "r(" + J1.points()[i] + "," + J1.points()[j] + ") = " + Q.label(J1.r(i, j)) + " not below s(" +
               J2.points()[f(i)] + "," + J2.points()[f(j)] + ") = " + Q.label(J2.r(f(i), f(j)));
  return std::nullopt;
}

bool is_frame_hom(const FrameHom& f) { return !frame_hom_violation(f).has_value(); }

FrameHom compose_frame_homs(const FrameHom& g, const FrameHom& f) {
  if (f.target != g.source) fail(ErrorKind::CompositionMismatch, f.target->name() + " vs " + g.source->name());
  FrameHom h{f.source, g.target, {}};
  for (std::size_t t : f.map) h.map.push_back(g(t));
  return h;
}

FrameHom identity_frame_hom(FramePtr J) {
  FrameHom h{J, J, {}};
  for (std::size_t i = 0; i < J->size(); ++i) h.map.push_back(i);
  return h;
}

}  // namespace tensalg

#include "dynmask/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynmask {

std::optional<BoundingBox> tight_bounds(const BinaryMask& mask) {
  BoundingBox box{mask.width, mask.height, -1, -1};
  for (int y = 0; y < mask.height; ++y) {
    const std::uint8_t* row = mask.bits.data() + static_cast<std::size_t>(y) * mask.width;
    for (int x = 0; x < mask.width; ++x) {
      if (!row[x]) continue;
      box.x_min = std::min(box.x_min, x);
      box.x_max = std::max(box.x_max, x);
      box.y_min = std::min(box.y_min, y);
      box.y_max = std::max(box.y_max, y);
    }
  }
  if (box.x_max < 0) return std::nullopt;
  return box;
}

void validate_detection(const Detection& det, int frame_width, int frame_height) {
  if (det.score < 0.0 || det.score > 1.0)
    throw std::invalid_argument("detection score outside [0,1]: " + std::to_string(det.score));
  if (det.mask.width != frame_width || det.mask.height != frame_height)
    throw std::invalid_argument("detection mask dimensions do not match frame");
  const BoundingBox& b = det.bbox;
  if (b.x_min > b.x_max || b.y_min > b.y_max || b.x_min < 0 || b.y_min < 0 ||
      b.x_max >= frame_width || b.y_max >= frame_height)
    throw std::invalid_argument("detection bounding box outside image bounds");
  for (int y = 0; y < det.mask.height; ++y) {
    const std::uint8_t* row = det.mask.bits.data() + static_cast<std::size_t>(y) * det.mask.width;
    for (int x = 0; x < det.mask.width; ++x) {
      if (row[x] && (x < b.x_min || x > b.x_max || y < b.y_min || y > b.y_max))
        throw std::invalid_argument("detection mask has set bits outside its bounding box");
    }
  }
}

std::vector<Detection> filter_detections(const std::vector<Detection>& dets,
                                         double score_threshold,
                                         std::size_t max_count) {
  std::vector<Detection> kept;
  kept.reserve(dets.size());
  for (const Detection& d : dets)
    if (d.score > score_threshold) kept.push_back(d);
  std::stable_sort(kept.begin(), kept.end(),
                   [](const Detection& a, const Detection& b) { return a.score > b.score; });
  if (kept.size() > max_count) kept.resize(max_count);
  return kept;
}

}  // namespace dynmask

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dynmask {

struct CameraIntrinsics {
  double fx = 0.0;
  double fy = 0.0;
  double cx = 0.0;  // principal point, pixels
  double cy = 0.0;
  int width = 0;
  int height = 0;
};

/// Camera pose in the world frame. `euler` holds (roll, pitch, yaw) in
/// radians following the (x,y,z) Tait-Bryan convention; the corresponding
/// rotation matrix maps camera-frame vectors into the world frame.
struct CameraPose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Vector3d euler = Eigen::Vector3d::Zero();
};

/// Metric depth image, row-major, meters. 0 encodes "no reading".
struct DepthImage {
  int width = 0;
  int height = 0;
  std::vector<float> data;

  DepthImage() = default;
  DepthImage(int w, int h, float fill = 0.0f) : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

  float at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
  float& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
  std::size_t size() const { return data.size(); }
};

/// Row-major {0,1} pixel grid.
struct BinaryMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  BinaryMask() = default;
  BinaryMask(int w, int h) : width(w), height(h), bits(static_cast<std::size_t>(w) * h, 0) {}

  std::uint8_t at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x]; }
  void set(int x, int y, std::uint8_t v = 1) { bits[static_cast<std::size_t>(y) * width + x] = v; }
  std::size_t size() const { return bits.size(); }
  bool same_shape(const BinaryMask& other) const { return width == other.width && height == other.height; }
};

/// Pixel bounding box, inclusive on both ends.
struct BoundingBox {
  int x_min = 0;
  int y_min = 0;
  int x_max = 0;
  int y_max = 0;

  double center_x() const { return 0.5 * (x_min + x_max); }
  double center_y() const { return 0.5 * (y_min + y_max); }
  int pixel_width() const { return x_max - x_min + 1; }
  int pixel_height() const { return y_max - y_min + 1; }
};

/// Tight bounds of the set bits; empty mask yields nullopt.
std::optional<BoundingBox> tight_bounds(const BinaryMask& mask);

struct Detection {
  int class_id = -1;
  double score = 0.0;
  BoundingBox bbox;
  BinaryMask mask;
};

/// Checks the ingest invariants: score in [0,1], mask dimensions match the
/// frame, bbox inside the image and containing every set bit of the mask.
/// Throws std::invalid_argument with a description of the first violation.
void validate_detection(const Detection& det, int frame_width, int frame_height);

/// Per-class prior knowledge used by tracking and motion classification.
struct ObjectClassSpec {
  int class_id = -1;
  std::string name;
  bool rigid = true;
  double accel_sigma = 1.0;         // random-acceleration std-dev, m/s^2
  double velocity_threshold = 0.1;  // m/s
};

struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> data;  // interleaved RGB; carried, never interpreted
};

struct Frame {
  double timestamp = 0.0;
  std::optional<RgbImage> rgb;
  DepthImage depth;
  CameraPose pose;
  std::vector<Detection> detections;
};

/// Keeps detections with score strictly above `score_threshold`, sorted by
/// descending score (stable, so equal scores keep input order), truncated to
/// `max_count`.
std::vector<Detection> filter_detections(const std::vector<Detection>& dets,
                                         double score_threshold,
                                         std::size_t max_count);

}  // namespace dynmask

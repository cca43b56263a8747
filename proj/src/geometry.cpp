#include "dynmask/geometry.hpp"

#include <cmath>
#include <numbers>

#include "dynmask/kernels/kernels.hpp"

namespace dynmask::geometry {

double normalize_angle(double a) {
  constexpr double pi = std::numbers::pi;
  a = std::fmod(a, 2.0 * pi);
  if (a <= -pi) a += 2.0 * pi;
  if (a > pi) a -= 2.0 * pi;
  return a;
}

Eigen::Matrix3d rotation_from_euler(const Eigen::Vector3d& euler) {
  const double roll = euler(0), pitch = euler(1), yaw = euler(2);
  const Eigen::AngleAxisd rx(roll, Eigen::Vector3d::UnitX());
  const Eigen::AngleAxisd ry(pitch, Eigen::Vector3d::UnitY());
  const Eigen::AngleAxisd rz(yaw, Eigen::Vector3d::UnitZ());
  return (rz * ry * rx).toRotationMatrix();
}

Eigen::Vector3d euler_from_rotation(const Eigen::Matrix3d& R) {
  // R = Rz(yaw) Ry(pitch) Rx(roll): R(2,0) = -sin(pitch)
  const double sp = -R(2, 0);
  double roll, pitch, yaw;
  if (std::abs(sp) > 1.0 - 1e-12) {
    // gimbal lock: only roll+yaw (or roll-yaw) observable
    pitch = std::copysign(std::numbers::pi / 2.0, sp);
    roll = 0.0;
    yaw = std::atan2(-R(0, 1), R(1, 1));
  } else {
    pitch = std::asin(sp);
    roll = std::atan2(R(2, 1), R(2, 2));
    yaw = std::atan2(R(1, 0), R(0, 0));
  }
  return {normalize_angle(roll), normalize_angle(pitch), normalize_angle(yaw)};
}

Eigen::Vector3d euler_from_quaternion(const Eigen::Quaterniond& q) {
  return euler_from_rotation(q.normalized().toRotationMatrix());
}

Eigen::Quaterniond quaternion_from_euler(const Eigen::Vector3d& euler) {
  return Eigen::Quaterniond(rotation_from_euler(euler));
}

Eigen::Vector3d observe_h(const Eigen::Vector3d& p_world, const CameraPose& pose) {
  return rotation_from_euler(pose.euler).transpose() * (p_world - pose.position);
}

Eigen::Vector3d camera_to_world(const Eigen::Vector3d& p_cam, const CameraPose& pose) {
  return rotation_from_euler(pose.euler) * p_cam + pose.position;
}

Eigen::Matrix<double, 3, 6> jacobian_h(const CameraPose& pose) {
  Eigen::Matrix<double, 3, 6> H = Eigen::Matrix<double, 3, 6>::Zero();
  H.leftCols<3>() = rotation_from_euler(pose.euler).transpose();
  return H;
}

Eigen::Vector2d project_to_pixel(const Eigen::Vector3d& p_cam, const CameraIntrinsics& intr) {
  return {intr.cx + intr.fx * p_cam.x() / p_cam.z(),
          intr.cy + intr.fy * p_cam.y() / p_cam.z()};
}

std::optional<Observation> backproject_centroid(const Detection& det,
                                                const DepthImage& depth,
                                                const CameraIntrinsics& intr,
                                                int min_valid_pixels) {
  kernels::MaskedDepthStats stats;
  // the detection invariant confines set bits to the bbox rows/cols
  const int x0 = det.bbox.x_min;
  const int span = det.bbox.pixel_width();
  for (int y = det.bbox.y_min; y <= det.bbox.y_max; ++y) {
    const std::size_t off = static_cast<std::size_t>(y) * depth.width + x0;
    const auto row = kernels::masked_depth_stats(depth.data.data() + off,
                                                 det.mask.bits.data() + off,
                                                 static_cast<std::size_t>(span));
    stats.sum += row.sum;
    stats.count += row.count;
  }
  if (stats.count < static_cast<std::size_t>(min_valid_pixels)) return std::nullopt;

  const double zz = stats.sum / static_cast<double>(stats.count);
  const double mu_x = det.bbox.center_x();
  const double mu_y = det.bbox.center_y();
  Observation obs;
  obs.z = {(mu_x - intr.cx) * zz / intr.fx, (mu_y - intr.cy) * zz / intr.fy, zz};
  return obs;
}

}  // namespace dynmask::geometry

#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <optional>

#include "dynmask/types.hpp"

namespace dynmask {

/// 3D centroid of a masked object in the camera frame, meters. z(2) > 0.
struct Observation {
  Eigen::Vector3d z = Eigen::Vector3d::Zero();
};

namespace geometry {

/// Wraps an angle to (-pi, pi].
double normalize_angle(double a);

/// Rotation for Tait-Bryan (x,y,z) angles (roll, pitch, yaw):
/// R = Rz(yaw) * Ry(pitch) * Rx(roll). Maps camera-frame vectors to world.
Eigen::Matrix3d rotation_from_euler(const Eigen::Vector3d& euler);

/// Inverse of rotation_from_euler; pitch is in [-pi/2, pi/2]. Near the
/// gimbal-lock singularity roll is set to 0 and the yaw absorbs the rest.
Eigen::Vector3d euler_from_rotation(const Eigen::Matrix3d& R);

Eigen::Vector3d euler_from_quaternion(const Eigen::Quaterniond& q);
Eigen::Quaterniond quaternion_from_euler(const Eigen::Vector3d& euler);

/// Observation function h: world point -> camera-frame coordinates,
/// h(p) = R^T (p - c).
Eigen::Vector3d observe_h(const Eigen::Vector3d& p_world, const CameraPose& pose);

/// Inverse of observe_h: camera-frame point -> world.
Eigen::Vector3d camera_to_world(const Eigen::Vector3d& p_cam, const CameraPose& pose);

/// Jacobian of h with respect to the 6-state [position, velocity]:
/// [R^T | 0], since h does not read velocity.
Eigen::Matrix<double, 3, 6> jacobian_h(const CameraPose& pose);

/// Pinhole projection of a camera-frame point (z > 0) to pixel coordinates.
Eigen::Vector2d project_to_pixel(const Eigen::Vector3d& p_cam, const CameraIntrinsics& intr);

/// Centroid observation for a detection: (mu_x, mu_y) is the bbox center,
/// z_z the mean of valid depth under the mask, back-projected through the
/// pinhole model. Returns nullopt (no observation, track coasts) when fewer
/// than `min_valid_pixels` mask pixels carry valid depth.
std::optional<Observation> backproject_centroid(const Detection& det,
                                                const DepthImage& depth,
                                                const CameraIntrinsics& intr,
                                                int min_valid_pixels = 20);

}  // namespace geometry
}  // namespace dynmask

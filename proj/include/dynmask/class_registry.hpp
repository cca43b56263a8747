#pragma once

#include <map>

#include "dynmask/types.hpp"

namespace dynmask {

/// Registry of the dynamic object classes of interest. Write-once at startup,
/// read-only afterwards; lookups must be total over every class id appearing
/// in accepted detections.
class ObjectClassRegistry {
 public:
  /// Throws std::invalid_argument on a duplicate class id.
  void register_class(ObjectClassSpec spec);

  const ObjectClassSpec* find(int class_id) const;
  /// Throws std::out_of_range for unregistered ids.
  const ObjectClassSpec& at(int class_id) const;
  bool contains(int class_id) const { return specs_.count(class_id) != 0; }
  std::size_t size() const { return specs_.size(); }
  const std::map<int, ObjectClassSpec>& specs() const { return specs_; }

  /// person (non-rigid, sigma 0.62, threshold 0.01 m/s) plus chair, cup and
  /// bottle (rigid, sigma 1.0, threshold 0.1 m/s), keyed by COCO-80 ids.
  static ObjectClassRegistry with_defaults();

 private:
  std::map<int, ObjectClassSpec> specs_;
};

namespace coco {
inline constexpr int kPerson = 0;
inline constexpr int kBottle = 39;
inline constexpr int kCup = 41;
inline constexpr int kChair = 56;
}  // namespace coco

}  // namespace dynmask

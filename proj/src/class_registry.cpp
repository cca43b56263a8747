#include "dynmask/class_registry.hpp"

#include <stdexcept>

namespace dynmask {

void ObjectClassRegistry::register_class(ObjectClassSpec spec) {
  if (spec.accel_sigma <= 0.0)
    throw std::invalid_argument("class '" + spec.name + "': accel_sigma must be > 0");
  if (spec.velocity_threshold < 0.0)
    throw std::invalid_argument("class '" + spec.name + "': velocity_threshold must be >= 0");
  auto [it, inserted] = specs_.emplace(spec.class_id, std::move(spec));
  if (!inserted)
    throw std::invalid_argument("duplicate class id " + std::to_string(it->first));
}

const ObjectClassSpec* ObjectClassRegistry::find(int class_id) const {
  auto it = specs_.find(class_id);
  return it == specs_.end() ? nullptr : &it->second;
}

const ObjectClassSpec& ObjectClassRegistry::at(int class_id) const {
  auto it = specs_.find(class_id);
  if (it == specs_.end())
    throw std::out_of_range("class id " + std::to_string(class_id) + " not registered");
  return it->second;
}

ObjectClassRegistry ObjectClassRegistry::with_defaults() {
  ObjectClassRegistry reg;
  reg.register_class({coco::kPerson, "person", /*rigid=*/false, 0.62, 0.01});
  reg.register_class({coco::kChair, "chair", /*rigid=*/true, 1.0, 0.1});
  reg.register_class({coco::kCup, "cup", /*rigid=*/true, 1.0, 0.1});
  reg.register_class({coco::kBottle, "bottle", /*rigid=*/true, 1.0, 0.1});
  return reg;
}

}  // namespace dynmask

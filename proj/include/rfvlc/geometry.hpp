// Copyright 2026 The rfvlc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

namespace rfvlc {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
  friend constexpr bool operator==(Vec3, Vec3) = default;
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

/// Position in meters plus a unit direction: emitter boresight for a
/// transmitter, surface normal for a receiver.
struct Pose3 {
  Vec3 position;
  Vec3 axis{1.0, 0.0, 0.0};

  friend bool operator==(const Pose3&, const Pose3&) = default;
};

/// Returns `v / |v|`; throws std::invalid_argument for the zero vector.
Vec3 normalized(Vec3 v);

}  // namespace rfvlc

#pragma once

#include <cmath>
#include <numbers>

namespace rrs {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
  friend constexpr Vec3 operator*(Vec3 v, double s) { return s * v; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }
inline double distance(Vec3 a, Vec3 b) { return norm(a - b); }
inline Vec3 normalized(Vec3 v) { return (1.0 / norm(v)) * v; }

// Closed axis-aligned box; used for buildings, debris and absorbers.
struct Box {
  Vec3 min;
  Vec3 max;

  friend bool operator==(const Box&, const Box&) = default;
};

inline constexpr double kSpeedOfLight = 299'792'458.0;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline double wavelength_m(double freq_hz) { return kSpeedOfLight / freq_hz; }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }
inline double dbm_to_mw(double dbm) { return db_to_linear(dbm); }
inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

}  // namespace rrs

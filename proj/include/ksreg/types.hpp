#pragma once

// Small fixed-size vector helpers and the two phase-space point types.
// Everything here is templated on the scalar so the same formulas serve the
// floating-point dynamics and the exact-rational identity checks.

#include <array>
#include <cmath>
#include <cstddef>

namespace ksreg {

template <class T, std::size_t N>
using Vec = std::array<T, N>;

template <class T>
using Vec3 = Vec<T, 3>;
template <class T>
using Vec4 = Vec<T, 4>;

template <class T, std::size_t N>
T dot(const Vec<T, N>& a, const Vec<T, N>& b) {
  T s(0);
  for (std::size_t i = 0; i < N; ++i) s += a[i] * b[i];
  return s;
}

template <class T, std::size_t N>
T norm_squared(const Vec<T, N>& a) {
  return dot(a, a);
}

template <std::size_t N>
double norm(const Vec<double, N>& a) {
  return std::sqrt(norm_squared(a));
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

template <class T, std::size_t N>
Vec<T, N> operator+(const Vec<T, N>& a, const Vec<T, N>& b) {
  Vec<T, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] + b[i];
  return r;
}

template <class T, std::size_t N>
Vec<T, N> operator-(const Vec<T, N>& a, const Vec<T, N>& b) {
  Vec<T, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = a[i] - b[i];
  return r;
}

template <class T, std::size_t N>
Vec<T, N> operator*(const T& s, const Vec<T, N>& a) {
  Vec<T, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = s * a[i];
  return r;
}

template <std::size_t N>
double max_abs_diff(const Vec<double, N>& a, const Vec<double, N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i) m = std::fmax(m, std::fabs(a[i] - b[i]));
  return m;
}

/// A point (q, p) of T R^4 = R^8.
template <class T>
struct PhasePoint8 {
  Vec4<T> q{};
  Vec4<T> p{};

  /// Coordinate z_i with z = (q1..q4, p1..p4).
  const T& operator[](std::size_t i) const { return i < 4 ? q[i] : p[i - 4]; }
  T& operator[](std::size_t i) { return i < 4 ? q[i] : p[i - 4]; }

  friend bool operator==(const PhasePoint8&, const PhasePoint8&) = default;
};

/// A point (x, y) of T R^3; produced by ks with x != 0.
template <class T>
struct PhasePoint6 {
  Vec3<T> x{};
  Vec3<T> y{};

  const T& operator[](std::size_t i) const { return i < 3 ? x[i] : y[i - 3]; }
  T& operator[](std::size_t i) { return i < 3 ? x[i] : y[i - 3]; }

  friend bool operator==(const PhasePoint6&, const PhasePoint6&) = default;
};

using Point8 = PhasePoint8<double>;
using Point6 = PhasePoint6<double>;

inline Vec<double, 8> as_array(const Point8& z) {
  return {z.q[0], z.q[1], z.q[2], z.q[3], z.p[0], z.p[1], z.p[2], z.p[3]};
}
inline Point8 point8_from(const Vec<double, 8>& a) {
  return {{a[0], a[1], a[2], a[3]}, {a[4], a[5], a[6], a[7]}};
}
inline Vec<double, 6> as_array(const Point6& w) {
  return {w.x[0], w.x[1], w.x[2], w.y[0], w.y[1], w.y[2]};
}
inline Point6 point6_from(const Vec<double, 6>& a) { return {{a[0], a[1], a[2]}, {a[3], a[4], a[5]}}; }

inline double distance(const Point6& a, const Point6& b) { return norm(as_array(a) - as_array(b)); }
inline double distance(const Point8& a, const Point8& b) { return norm(as_array(a) - as_array(b)); }

}  // namespace ksreg

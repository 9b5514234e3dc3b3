#pragma once

// The sixteen quadratic invariants pi_1..pi_16 of the Xi circle action on
// T R^4, the generator basis (K, L, H2, Xi; U, V) and the linear maps between
// them.
//
// One monomial table (kPiMonomials) and one composition matrix
// (kGeneratorFromPi) are the single source for both the floating-point path
// and the exact-rational path, and for the quadratic forms used by the
// Poisson oracle. eval_generators_direct() is a second, hand-expanded route
// kept deliberately independent of those tables.

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>

#include "ksreg/types.hpp"

namespace ksreg {

/// coef * z[a] * z[b], with z = (q1..q4, p1..p4).
struct QuadMonomial {
  int coef;
  int a;
  int b;
};

inline constexpr std::size_t kNumInvariants = 16;

// clang-format off
inline constexpr std::array<std::array<QuadMonomial, 2>, kNumInvariants> kPiMonomials{{
    {{{1, 0, 0}, {1, 1, 1}}},    // pi1  = q1^2 + q2^2
    {{{1, 2, 2}, {1, 3, 3}}},    // pi2  = q3^2 + q4^2
    {{{1, 4, 4}, {1, 5, 5}}},    // pi3  = p1^2 + p2^2
    {{{1, 6, 6}, {1, 7, 7}}},    // pi4  = p3^2 + p4^2
    {{{1, 0, 4}, {1, 1, 5}}},    // pi5  = q1p1 + q2p2
    {{{1, 2, 6}, {1, 3, 7}}},    // pi6  = q3p3 + q4p4
    {{{1, 0, 5}, {-1, 1, 4}}},   // pi7  = q1p2 - q2p1
    {{{1, 2, 7}, {-1, 3, 6}}},   // pi8  = q3p4 - q4p3
    {{{1, 0, 3}, {-1, 1, 2}}},   // pi9  = q1q4 - q2q3
    {{{1, 0, 2}, {1, 1, 3}}},    // pi10 = q1q3 + q2q4
    {{{1, 4, 7}, {-1, 5, 6}}},   // pi11 = p1p4 - p2p3
    {{{1, 4, 6}, {1, 5, 7}}},    // pi12 = p1p3 + p2p4
    {{{1, 0, 7}, {-1, 1, 6}}},   // pi13 = q1p4 - q2p3
    {{{1, 0, 6}, {1, 1, 7}}},    // pi14 = q1p3 + q2p4
    {{{1, 3, 4}, {-1, 2, 5}}},   // pi15 = q4p1 - q3p2
    {{{1, 2, 4}, {1, 3, 5}}},    // pi16 = q3p1 + q4p2
}};
// clang-format on

/// Index of each generator in the flat 16-vector (K, L, H2, Xi; U, V).
enum class Gen : int { K1, K2, K3, L1, L2, L3, H2, Xi, U1, U2, U3, U4, V1, V2, V3, V4 };

inline constexpr std::array<std::string_view, kNumInvariants> kGeneratorNames{
    "K1", "K2", "K3", "L1", "L2", "L3", "H2", "Xi", "U1", "U2", "U3", "U4", "V1", "V2", "V3", "V4"};

constexpr int index_of(Gen g) { return static_cast<int>(g); }

/// Generator i = (1/2) * sum_j kGeneratorFromPi[i][j] * pi_{j+1}.
// clang-format off
inline constexpr int kGeneratorFromPi[kNumInvariants][kNumInvariants] = {
    // pi: 1   2   3   4   5   6   7   8   9  10  11  12  13  14  15  16
    {      0,  0,  0,  0,  0,  0,  0,  0,  0, -2,  0, -2,  0,  0,  0,  0},  // K1
    {      0,  0,  0,  0,  0,  0,  0,  0, -2,  0, -2,  0,  0,  0,  0,  0},  // K2
    {     -1,  1, -1,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},  // K3
    {      0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0, -2,  0,  2,  0},  // L1
    {      0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  2,  0, -2},  // L2
    {      0,  0,  0,  0,  0,  0, -2,  2,  0,  0,  0,  0,  0,  0,  0,  0},  // L3
    {      1,  1,  1,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},  // H2
    {      0,  0,  0,  0,  0,  0,  2,  2,  0,  0,  0,  0,  0,  0,  0,  0},  // Xi
    {      0,  0,  0,  0, -2, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},  // U1
    {      0,  0,  0,  0,  0,  0,  0,  0,  0,  2,  0, -2,  0,  0,  0,  0},  // U2
    {      0,  0,  0,  0,  0,  0,  0,  0,  2,  0, -2,  0,  0,  0,  0,  0},  // U3
    {      1, -1, -1,  1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},  // U4
    {      1,  1, -1, -1,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},  // V1
    {      0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  2,  0,  2},  // V2
    {      0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0,  2,  0,  2,  0},  // V3
    {      0,  0,  0,  0,  2, -2,  0,  0,  0,  0,  0,  0,  0,  0,  0,  0},  // V4
};
// clang-format on

template <class T>
using PiVector = Vec<T, kNumInvariants>;

template <class T>
struct GeneratorVector {
  Vec3<T> K{};
  Vec3<T> L{};
  T H2{};
  T Xi{};
  Vec4<T> U{};
  Vec4<T> V{};

  /// Flat form in the order of Gen.
  [[nodiscard]] Vec<T, kNumInvariants> flat() const {
    return {K[0], K[1], K[2], L[0], L[1], L[2], H2, Xi, U[0], U[1], U[2], U[3], V[0], V[1], V[2], V[3]};
  }
  static GeneratorVector from_flat(const Vec<T, kNumInvariants>& c) {
    return {{c[0], c[1], c[2]}, {c[3], c[4], c[5]}, c[6], c[7], {c[8], c[9], c[10], c[11]},
            {c[12], c[13], c[14], c[15]}};
  }

  friend bool operator==(const GeneratorVector&, const GeneratorVector&) = default;
};

/// Image of the second-stage orbit map: (xi, eta, H2, Xi).
template <class T>
struct ReducedPoint {
  Vec3<T> xi{};
  Vec3<T> eta{};
  T H2{};
  T Xi{};
};

template <class T>
PiVector<T> eval_pi(const PhasePoint8<T>& z) {
  PiVector<T> pi;
  for (std::size_t i = 0; i < kNumInvariants; ++i) {
    T s(0);
    for (const auto& m : kPiMonomials[i]) {
      const T term = z[m.a] * z[m.b];
      if (m.coef > 0) s += term; else s -= term;
    }
    pi[i] = s;
  }
  return pi;
}

template <class T>
GeneratorVector<T> generators_from_pi(const PiVector<T>& pi) {
  Vec<T, kNumInvariants> g;
  for (std::size_t i = 0; i < kNumInvariants; ++i) {
    T s(0);
    for (std::size_t j = 0; j < kNumInvariants; ++j) {
      if (kGeneratorFromPi[i][j] != 0) s += T(kGeneratorFromPi[i][j]) * pi[j];
    }
    g[i] = s / T(2);
  }
  return GeneratorVector<T>::from_flat(g);
}

/// Generators through the pi composition (the table-driven route).
template <class T>
GeneratorVector<T> eval_generators(const PhasePoint8<T>& z) {
  return generators_from_pi(eval_pi(z));
}

/// Generators written out as explicit polynomials in (q, p).
template <class T>
GeneratorVector<T> eval_generators_direct(const PhasePoint8<T>& z) {
  const auto& [q1, q2, q3, q4] = z.q;
  const auto& [p1, p2, p3, p4] = z.p;
  const T two(2);
  GeneratorVector<T> g;
  g.K[0] = -(q1 * q3 + q2 * q4 + p1 * p3 + p2 * p4);
  g.K[1] = -(q1 * q4 - q2 * q3 + p1 * p4 - p2 * p3);
  g.K[2] = (q3 * q3 + q4 * q4 + p3 * p3 + p4 * p4 - q1 * q1 - q2 * q2 - p1 * p1 - p2 * p2) / two;
  g.L[0] = q4 * p1 - q3 * p2 + q2 * p3 - q1 * p4;
  g.L[1] = q1 * p3 + q2 * p4 - q3 * p1 - q4 * p2;
  g.L[2] = q3 * p4 - q4 * p3 + q2 * p1 - q1 * p2;
  g.H2 = (q1 * q1 + q2 * q2 + q3 * q3 + q4 * q4 + p1 * p1 + p2 * p2 + p3 * p3 + p4 * p4) / two;
  g.Xi = q1 * p2 - q2 * p1 + q3 * p4 - q4 * p3;
  g.U[0] = -(q1 * p1 + q2 * p2 + q3 * p3 + q4 * p4);
  g.U[1] = q1 * q3 + q2 * q4 - p1 * p3 - p2 * p4;
  g.U[2] = q1 * q4 - q2 * q3 + p2 * p3 - p1 * p4;
  g.U[3] = (q1 * q1 + q2 * q2 - q3 * q3 - q4 * q4 + p3 * p3 + p4 * p4 - p1 * p1 - p2 * p2) / two;
  g.V[0] = (q1 * q1 + q2 * q2 + q3 * q3 + q4 * q4 - p1 * p1 - p2 * p2 - p3 * p3 - p4 * p4) / two;
  g.V[1] = q1 * p3 + q2 * p4 + q3 * p1 + q4 * p2;
  g.V[2] = q1 * p4 - q2 * p3 + q4 * p1 - q3 * p2;
  g.V[3] = q1 * p1 + q2 * p2 - q3 * p3 - q4 * p4;
  return g;
}

/// Inverse of generators_from_pi. Note pi11 = -(U3 + K2)/2; the variant
/// -(U3 - K2)/2 seen in some tables is -pi9 and does not invert the map.
template <class T>
PiVector<T> pi_from_generators(const GeneratorVector<T>& g) {
  const T two(2);
  const auto& K = g.K;
  const auto& L = g.L;
  const auto& U = g.U;
  const auto& V = g.V;
  return {
      (g.H2 - K[2] + U[3] + V[0]) / two,  // pi1
      (g.H2 + K[2] - U[3] + V[0]) / two,  // pi2
      (g.H2 - K[2] - U[3] - V[0]) / two,  // pi3
      (g.H2 + K[2] + U[3] - V[0]) / two,  // pi4
      (V[3] - U[0]) / two,                // pi5
      -(U[0] + V[3]) / two,               // pi6
      (g.Xi - L[2]) / two,                // pi7
      (g.Xi + L[2]) / two,                // pi8
      (U[2] - K[1]) / two,                // pi9
      (U[1] - K[0]) / two,                // pi10
      -(U[2] + K[1]) / two,               // pi11
      -(U[1] + K[0]) / two,               // pi12
      (V[2] - L[0]) / two,                // pi13
      (V[1] + L[1]) / two,                // pi14
      (V[2] + L[0]) / two,                // pi15
      (V[1] - L[1]) / two,                // pi16
  };
}

template <class T>
ReducedPoint<T> reduce(const GeneratorVector<T>& g) {
  ReducedPoint<T> r;
  const T two(2);
  for (std::size_t j = 0; j < 3; ++j) {
    r.xi[j] = (g.K[j] + g.L[j]) / two;
    r.eta[j] = (g.K[j] - g.L[j]) / two;
  }
  r.H2 = g.H2;
  r.Xi = g.Xi;
  return r;
}

/// Momentum map (H2, Xi) evaluated directly on (q, p).
template <class T>
std::pair<T, T> momentum_map(const PhasePoint8<T>& z) {
  const auto& [q1, q2, q3, q4] = z.q;
  const auto& [p1, p2, p3, p4] = z.p;
  return {(dot(z.q, z.q) + dot(z.p, z.p)) / T(2), q1 * p2 - q2 * p1 + q3 * p4 - q4 * p3};
}

}  // namespace ksreg

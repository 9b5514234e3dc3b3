#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ksreg/invariants.hpp"
#include "ksreg/ks_map.hpp"
#include "ksreg/rational.hpp"
#include "ksreg/sampling.hpp"

using namespace ksreg;

namespace {

using R = Rational;
using Z = PhasePoint8<R>;

Z rpoint(Vec4<R> q, Vec4<R> p) { return Z{q, p}; }

GeneratorVector<R> gvec(Vec3<R> K, Vec3<R> L, R h, R xi, Vec4<R> U, Vec4<R> V) { return {K, L, h, xi, U, V}; }

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("eval_pi examples") {
  const auto zero = eval_pi(Z{});
  for (const R& v : zero) CHECK(v.is_zero());

  const auto a = eval_pi(rpoint({1, 0, 0, 0}, {0, 0, 0, 0}));
  for (std::size_t i = 0; i < kNumInvariants; ++i) CHECK(a[i] == R(i == 0 ? 1 : 0));

  const auto b = eval_pi(rpoint({1, 0, 0, 0}, {0, 1, 0, 0}));
  for (std::size_t i = 0; i < kNumInvariants; ++i) {
    CAPTURE(i);
    CHECK(b[i] == R(i == 0 || i == 2 || i == 6 ? 1 : 0));
  }
}

TEST_CASE("eval_generators examples") {
  const auto z1 = rpoint({1, 0, 0, 0}, {0, 1, 0, 0});
  const auto g1 = eval_generators(z1);
  CHECK(g1 == gvec({0, 0, -1}, {0, 0, -1}, 1, 1, {0, 0, 0, 0}, {0, 0, 0, 0}));
  CHECK(eval_generators_direct(z1) == g1);

  const auto z2 = rpoint({1, 0, 0, 0}, {0, 0, 1, 0});
  const auto g2 = eval_generators(z2);
  CHECK(g2 == gvec({0, 0, 0}, {0, 1, 0}, 1, 0, {0, 0, 0, 1}, {0, 1, 0, 0}));
  CHECK(eval_generators_direct(z2) == g2);

  CHECK(eval_generators(Z{}) == GeneratorVector<R>{});

  // float path gives the same numbers
  const Point8 zf{{1, 0, 0, 0}, {0, 0, 1, 0}};
  const auto gf = eval_generators(zf).flat();
  const auto ge = g2.flat();
  for (std::size_t i = 0; i < kNumInvariants; ++i) CHECK(gf[i] == ge[i].to_double());
}

TEST_CASE("pi_from_generators examples") {
  const auto z = rpoint({1, 0, 0, 0}, {0, 1, 0, 0});
  CHECK(pi_from_generators(eval_generators(z)) == eval_pi(z));

  const auto zero = pi_from_generators(GeneratorVector<R>{});
  for (const R& v : zero) CHECK(v.is_zero());

  GeneratorVector<R> g;
  g.H2 = 1;
  g.K[2] = -1;
  const auto pi = pi_from_generators(g);
  CHECK(pi[0] == R(1));
  CHECK(pi[1] == R(0));
  CHECK(pi[2] == R(1));
  CHECK(pi[3] == R(0));
}

TEST_CASE("pi11 of the inverse") {
  // the variant -(U3 - K2)/2 equals -pi9 and breaks the round trip
  Rng rng(21);
  const auto z = random_rational_point(rng);
  const auto pi = eval_pi(z);
  const auto g = eval_generators(z);
  CHECK(-(g.U[2] + g.K[1]) / R(2) == pi[10]);
  CHECK(-(g.U[2] - g.K[1]) / R(2) == -pi[8]);
  CHECK(pi[10] != -pi[8]);
}

TEST_CASE("reduce examples") {
  const auto r1 = reduce(gvec({0, 0, -1}, {0, 0, -1}, 1, 1, {}, {}));
  CHECK(r1.xi == Vec3<R>{0, 0, -1});
  CHECK(r1.eta == Vec3<R>{0, 0, 0});
  const auto r2 = reduce(gvec({0, 0, 0}, {0, 1, 0}, 1, 0, {}, {}));
  CHECK(r2.xi == Vec3<R>{0, R(1, 2), 0});
  CHECK(r2.eta == Vec3<R>{0, R(-1, 2), 0});
  const auto r3 = reduce(GeneratorVector<R>{});
  CHECK(r3.xi == Vec3<R>{});
  CHECK(r3.eta == Vec3<R>{});
}

TEST_CASE("composition through pi equals direct evaluation on random points") {
  Rng rng(22);
  for (int n = 0; n < 100000; ++n) {
    const auto z = random_rational_point(rng);
    const auto g = eval_generators_direct(z);
    REQUIRE(generators_from_pi(eval_pi(z)) == g);
  }
}

TEST_CASE("linear round trip both ways") {
  Rng rng(23);
  for (int n = 0; n < 2000; ++n) {
    PiVector<R> pi;
    for (auto& v : pi) v = rng.rational(50, 12);
    REQUIRE(pi_from_generators(generators_from_pi(pi)) == pi);
    Vec<R, kNumInvariants> c;
    for (auto& v : c) v = rng.rational(50, 12);
    const auto g = GeneratorVector<R>::from_flat(c);
    REQUIRE(generators_from_pi(pi_from_generators(g)) == g);
  }
}

TEST_CASE("reduced radii and wedge, exact") {
  Rng rng(24);
  const R quarter(1, 4);
  for (int n = 0; n < 5000; ++n) {
    const auto z = random_rational_point(rng);
    const auto g = eval_generators(z);
    const auto r = reduce(g);
    REQUIRE(dot(r.xi, r.xi) == quarter * (g.H2 + g.Xi) * (g.H2 + g.Xi));
    REQUIRE(dot(r.eta, r.eta) == quarter * (g.H2 - g.Xi) * (g.H2 - g.Xi));
    REQUIRE(abs(g.Xi) <= g.H2);
    const auto [h, xi] = momentum_map(z);
    REQUIRE(h == g.H2);
    REQUIRE(xi == g.Xi);
  }
}

TEST_CASE("pi is invariant under the Xi circle action") {
  Rng rng(25);
  for (int n = 0; n < 1000; ++n) {
    const Point8 z = random_point(rng);
    const double s = rng.uniform(0.0, 2 * std::numbers::pi);
    const auto a = eval_pi(z);
    const auto b = eval_pi(ks_fiber_action(z, s));
    const double scale = std::fmax(1.0, norm_squared(as_array(z)));
    for (std::size_t i = 0; i < kNumInvariants; ++i) REQUIRE(std::fabs(a[i] - b[i]) <= 1e-12 * scale);
  }
}

TEST_CASE("Cauchy-Schwarz pattern of eval_pi") {
  Rng rng(26);
  for (int n = 0; n < 1000; ++n) {
    const auto pi = eval_pi(random_rational_point(rng));
    for (int i = 0; i < 4; ++i) REQUIRE(pi[i].sign() >= 0);
    REQUIRE(pi[4] * pi[4] <= pi[0] * pi[2]);
    REQUIRE(pi[5] * pi[5] <= pi[1] * pi[3]);
  }
}

}  // TEST_SUITE

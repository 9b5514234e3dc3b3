#include <doctest.h>

#include <set>
#include <string>

#include "ksreg/quadratic_poisson.hpp"
#include "ksreg/sampling.hpp"

using namespace ksreg;

namespace {

QuadraticForm gen(Gen g) { return QuadraticForm::generator(g); }

// {f,g}(z) from the gradients alone: sum df/dq dg/dp - df/dp dg/dq.
Rational bracket_at(const QuadraticForm& f, const QuadraticForm& g, const PhasePoint8<Rational>& z) {
  const auto df = f.gradient(z);
  const auto dg = g.gradient(z);
  Rational s;
  for (std::size_t i = 0; i < 4; ++i) s += df[i] * dg[i + 4] - df[i + 4] * dg[i];
  return s;
}

// q1^2 + q2^2 etc. written out by hand, independent of the monomial table.
QuadraticForm poly(std::initializer_list<QuadMonomial> terms) { return QuadraticForm::from_monomials(terms); }

}  // namespace

TEST_SUITE("quadratic_poisson") {

TEST_CASE("rational stays canonical") {
  const Rational r(6, -4);
  CHECK(r.numerator() == "-3");
  CHECK(r.denominator() == "2");
  CHECK(Rational::from_string("10/4") == Rational(5, 2));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK_THROWS(Rational(1, 0));
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("forms must be symmetric") {
  QuadraticForm::Matrix m;
  m[0][1] = Rational(1);
  CHECK_THROWS_AS(QuadraticForm{m}, std::invalid_argument);
}

TEST_CASE("bracket examples") {
  CHECK(bracket(gen(Gen::H2), gen(Gen::Xi)).is_zero());

  const QuadraticForm pi1 = poly({{1, 0, 0}, {1, 1, 1}});
  const QuadraticForm pi3 = poly({{1, 4, 4}, {1, 5, 5}});
  const QuadraticForm four_pi5 = poly({{4, 0, 4}, {4, 1, 5}});
  CHECK(bracket(pi1, pi3) == four_pi5);
  CHECK(bracket(QuadraticForm::pi(0), QuadraticForm::pi(2)) == Rational(4) * QuadraticForm::pi(4));

  for (std::size_t i = 0; i < kNumInvariants; ++i) {
    CAPTURE(i);
    CHECK(bracket(gen(Gen::Xi), QuadraticForm::pi(i)).is_zero());
  }
}

TEST_CASE("sign is pinned: {K1,K2} = +2 L3") {
  CHECK(bracket(gen(Gen::K1), gen(Gen::K2)) == Rational(2) * gen(Gen::L3));
  CHECK(bracket(gen(Gen::K2), gen(Gen::K1)) == Rational(-2) * gen(Gen::L3));
  // canonical pair: {q1, p1} = 1 shows up as {q1^2/2, p1^2/2} = q1 p1
  CHECK(bracket(poly({{1, 0, 0}}), poly({{1, 4, 4}})) == poly({{4, 0, 4}}));
}

TEST_CASE("antisymmetry and bilinearity on random pairs") {
  Rng rng(11);
  for (int n = 0; n < 10000; ++n) {
    const auto f = QuadraticForm::random(rng, 9, 4);
    const auto g = QuadraticForm::random(rng, 9, 4);
    const auto fg = bracket(f, g);
    REQUIRE(fg == -bracket(g, f));
    if (n % 10 == 0) {
      const auto h = QuadraticForm::random(rng, 9, 4);
      const Rational a = rng.rational(9, 4), b = rng.rational(9, 4);
      REQUIRE(bracket(a * f + b * h, g) == a * fg + b * bracket(h, g));
      REQUIRE(bracket(f, f).is_zero());
    }
  }
}

TEST_CASE("Jacobi identity on random triples") {
  Rng rng(12);
  for (int n = 0; n < 1000; ++n) {
    const auto f = QuadraticForm::random(rng, 9, 4);
    const auto g = QuadraticForm::random(rng, 9, 4);
    const auto h = QuadraticForm::random(rng, 9, 4);
    const auto j = bracket(f, bracket(g, h)) + bracket(g, bracket(h, f)) + bracket(h, bracket(f, g));
    REQUIRE(j.is_zero());
  }
}

TEST_CASE("bracket agrees with the gradient formula at points") {
  Rng rng(13);
  for (int n = 0; n < 300; ++n) {
    const auto f = QuadraticForm::random(rng, 9, 4);
    const auto g = QuadraticForm::random(rng, 9, 4);
    const auto z = random_rational_point(rng);
    REQUIRE(bracket(f, g).evaluate(z) == bracket_at(f, g, z));
  }
}

TEST_CASE("generator forms match the float invariants") {
  Rng rng(14);
  for (int n = 0; n < 50; ++n) {
    const auto z = random_rational_point(rng);
    const auto g = eval_generators(z).flat();
    for (std::size_t i = 0; i < kNumInvariants; ++i) REQUIRE(gen(static_cast<Gen>(i)).evaluate(z) == g[i]);
  }
}

TEST_CASE("decompose round-trips and rejects non-invariant forms") {
  for (std::size_t i = 0; i < kNumInvariants; ++i) {
    const auto c = decompose(gen(static_cast<Gen>(i)));
    for (std::size_t j = 0; j < kNumInvariants; ++j) CHECK(c[j] == Rational(i == j ? 1 : 0));
  }
  const QuadraticForm q1sq = poly({{1, 0, 0}});
  CHECK_FALSE(try_decompose(q1sq).has_value());
  CHECK_THROWS_AS(decompose(q1sq), DecompositionError);
}

TEST_CASE("so(4) relations close exactly") {
  const So4Report r = verify_so4_relations();
  CHECK(r.relations.size() == 27);
  CHECK(r.all_match);
  for (const auto& rel : r.relations) {
    CAPTURE(rel.pair);
    CHECK(rel.match);
  }
  // {K1, L2} = 2 K3, {K1, K1} = 0
  CHECK(bracket(gen(Gen::K1), gen(Gen::L2)) == Rational(2) * gen(Gen::K3));
  CHECK(bracket(gen(Gen::K1), gen(Gen::K1)).is_zero());
  // every {K, L} bracket has integer coordinates in span{K, L}
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      const auto c = decompose(bracket(gen(static_cast<Gen>(a)), gen(static_cast<Gen>(b))));
      for (std::size_t k = 0; k < kNumInvariants; ++k) {
        REQUIRE(c[k].denominator() == "1");
        if (k >= 6) REQUIRE(c[k].is_zero());
      }
    }
  }
}

TEST_CASE("reduced brackets: oracle factors") {
  // xi = (K+L)/2, eta = (K-L)/2, brackets computed by hand from the K/L table:
  // {xi_i, xi_j} = 2 eps xi_k, {eta_i, eta_j} = -2 eps eta_k, {xi_i, eta_j} = 0
  const Rational half(1, 2);
  const auto xi = [&](int i) { return half * (gen(static_cast<Gen>(i)) + gen(static_cast<Gen>(3 + i))); };
  const auto eta = [&](int i) { return half * (gen(static_cast<Gen>(i)) - gen(static_cast<Gen>(3 + i))); };
  CHECK(bracket(xi(0), xi(1)) == Rational(2) * xi(2));
  CHECK(bracket(eta(0), eta(1)) == Rational(-2) * eta(2));
  CHECK(bracket(xi(0), eta(1)).is_zero());

  const So4Report r = verify_so4_relations();
  std::set<std::string> families;
  for (const auto& c : r.reduced) {
    CAPTURE(c.pair);
    families.insert(c.family);
    REQUIRE(c.oracle_factor.has_value());
    if (c.family == "xi-xi") {
      CHECK(*c.oracle_factor == Rational(2));
      CHECK(c.claimed_factor == Rational(1));
    } else if (c.family == "eta-eta") {
      CHECK(*c.oracle_factor == Rational(-2));
      CHECK(c.claimed_factor == Rational(-1));
    } else {
      CHECK(*c.oracle_factor == Rational(0));
    }
  }
  CHECK(families == std::set<std::string>{"xi-xi", "eta-eta", "xi-eta"});
}

TEST_CASE("induced vector fields") {
  CHECK(induced_vector_field(Gen::Xi).is_zero());

  const auto yh = induced_vector_field(Gen::H2);
  for (int i = 0; i < 4; ++i) {
    const auto u = yh.components[8 + i];
    const auto v = yh.components[12 + i];
    for (std::size_t k = 0; k < kNumInvariants; ++k) {
      CHECK(u[k] == Rational(k == static_cast<std::size_t>(12 + i) ? 2 : 0));
      CHECK(v[k] == Rational(k == static_cast<std::size_t>(8 + i) ? -2 : 0));
    }
  }
  for (int c = 0; c < 8; ++c) CHECK(is_zero(yh.components[c]));

  const auto yk1 = induced_vector_field(Gen::K1);
  const auto& on_l2 = yk1.components[index_of(Gen::L2)];
  for (std::size_t k = 0; k < kNumInvariants; ++k) CHECK(on_l2[k] == Rational(k == 2 ? -2 : 0));
}

TEST_CASE("bracket table is antisymmetric") {
  const BracketTable t = bracket_table();
  for (std::size_t a = 0; a < kNumInvariants; ++a) {
    for (std::size_t b = 0; b < kNumInvariants; ++b) {
      const auto& ab = t.at(static_cast<Gen>(a), static_cast<Gen>(b));
      const auto& ba = t.at(static_cast<Gen>(b), static_cast<Gen>(a));
      for (std::size_t k = 0; k < kNumInvariants; ++k) REQUIRE(ab[k] == -ba[k]);
    }
  }
}

TEST_CASE("diff against the tabulated fields") {
  const auto diffs = diff_against_reference_table();
  CHECK(diffs.size() == 23);
  std::set<std::string> fields;
  for (const auto& d : diffs) fields.insert(d.field);
  CHECK(fields == std::set<std::string>{"Y_K1", "Y_U2", "Y_U3", "Y_U4", "Y_V1", "Y_V2", "Y_V3", "Y_V4"});
  bool k1_u2 = false;
  for (const auto& d : diffs) k1_u2 |= d.field == "Y_K1" && d.component == "U2";
  CHECK(k1_u2);
}

}  // TEST_SUITE

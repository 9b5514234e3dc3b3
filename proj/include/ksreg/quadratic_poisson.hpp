#pragma once

// Exact Poisson algebra of quadratic polynomials on (T R^4, sum dq ^ dp).
//
// A quadratic polynomial f is stored as the symmetric 8x8 rational matrix A
// with f(z) = 1/2 z^T A z. The canonical bracket
//     {f, g} = sum_i (df/dq_i dg/dp_i - df/dp_i dg/dq_i)
// of two quadratics is again quadratic, with matrix A J B - B J A.
// With this convention {K1, K2} = +2 L3, so no global sign change is needed.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ksreg/invariants.hpp"
#include "ksreg/rational.hpp"

namespace ksreg {

class QuadraticForm {
 public:
  static constexpr std::size_t kDim = 8;
  using Matrix = std::array<std::array<Rational, kDim>, kDim>;

  QuadraticForm();
  /// Throws std::invalid_argument unless `coeffs` is exactly symmetric.
  explicit QuadraticForm(const Matrix& coeffs);

  /// Sum of coef * z_a * z_b.
  template <class Range>
  static QuadraticForm from_monomials(const Range& monomials);

  static QuadraticForm pi(std::size_t index);  // 0-based: pi(0) is pi_1
  static QuadraticForm generator(Gen g);
  /// Random form with entries n/d, |n| <= max_num, 1 <= d <= max_den.
  template <class Rng>
  static QuadraticForm random(Rng& rng, long max_num, long max_den);

  [[nodiscard]] const Matrix& coeffs() const { return a_; }
  [[nodiscard]] const Rational& coeff(std::size_t i, std::size_t j) const { return a_[i][j]; }
  /// Coefficient of the monomial z_i z_j (i <= j) in the polynomial.
  [[nodiscard]] Rational monomial_coeff(std::size_t i, std::size_t j) const;
  [[nodiscard]] bool is_zero() const;

  [[nodiscard]] Rational evaluate(const PhasePoint8<Rational>& z) const;
  [[nodiscard]] double evaluate(const Point8& z) const;
  /// Gradient A z.
  [[nodiscard]] std::array<Rational, kDim> gradient(const PhasePoint8<Rational>& z) const;

  QuadraticForm& operator+=(const QuadraticForm& rhs);
  QuadraticForm& operator-=(const QuadraticForm& rhs);
  QuadraticForm& operator*=(const Rational& s);
  friend QuadraticForm operator+(QuadraticForm a, const QuadraticForm& b) { return a += b; }
  friend QuadraticForm operator-(QuadraticForm a, const QuadraticForm& b) { return a -= b; }
  friend QuadraticForm operator*(const Rational& s, QuadraticForm a) { return a *= s; }
  friend QuadraticForm operator-(QuadraticForm a) { return a *= Rational(-1); }
  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) { return a.a_ == b.a_; }

  [[nodiscard]] std::string to_polynomial_string() const;

 private:
  Matrix a_;
};

QuadraticForm bracket(const QuadraticForm& f, const QuadraticForm& g);

/// Coefficients of a form in the generator basis (K, L, H2, Xi; U, V).
using GeneratorCombination = std::array<Rational, kNumInvariants>;

/// Raised when a form is not a combination of the sixteen generators.
class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes f in the generator basis. Throws DecompositionError if f is not
/// invariant under the Xi circle action.
GeneratorCombination decompose(const QuadraticForm& f);
/// Non-throwing variant.
std::optional<GeneratorCombination> try_decompose(const QuadraticForm& f);
QuadraticForm compose(const GeneratorCombination& c);
std::string to_string(const GeneratorCombination& c);
bool is_zero(const GeneratorCombination& c);

int levi_civita(int i, int j, int k);

// so(4) structure relations --------------------------------------------------

struct RelationCheck {
  std::string pair;      // e.g. "{K1,L2}"
  std::string expected;  // in the generator basis
  std::string computed;
  bool match = false;
};

/// {a_i, b_j} = lambda * sum_k eps_ijk c_k in the (xi, eta) basis.
struct ScalarFactorCheck {
  std::string family;  // "xi-xi", "eta-eta", "xi-eta"
  std::string pair;
  std::optional<Rational> oracle_factor;  // empty if not proportional
  Rational claimed_factor;                // the factor asserted in the reduced-bracket table
  std::optional<Rational> combined_factor;  // the factor implied by the K/L relations
  std::string computed;                   // oracle result in the generator basis
};

struct So4Report {
  std::vector<RelationCheck> relations;  // 27 entries: KK, LL, KL for i, j = 1..3
  std::vector<ScalarFactorCheck> reduced;
  bool all_match = false;
};

So4Report verify_so4_relations();

// Induced vector fields on the first-stage orbit space ----------------------

/// Y_G as a derivation: component c is {c, G}, the Lie derivative of the
/// generator c along X_G, written in the generator basis.
struct InducedVectorField {
  Gen field;
  std::array<GeneratorCombination, kNumInvariants> components;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string to_string() const;
};

InducedVectorField induced_vector_field(Gen g);

/// One term coef * source * d/d(target) of a tabulated derivation.
struct TableTerm {
  int coef;
  Gen source;
  Gen target;
};

/// The reference list of induced vector fields as commonly tabulated,
/// transcribed verbatim (including its inconsistencies).
const std::vector<std::vector<TableTerm>>& reference_vector_field_table();

struct TableDiscrepancy {
  std::string field;      // "Y_K1"
  std::string component;  // "U2"
  std::string tabulated;
  std::string computed;
};

std::vector<TableDiscrepancy> diff_against_reference_table();

/// Full antisymmetric table {a, b} for all generator pairs a, b.
struct BracketTable {
  std::array<std::array<GeneratorCombination, kNumInvariants>, kNumInvariants> entries;
  [[nodiscard]] const GeneratorCombination& at(Gen a, Gen b) const {
    return entries[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
};

BracketTable bracket_table();

// ---------------------------------------------------------------------------

template <class Range>
QuadraticForm QuadraticForm::from_monomials(const Range& monomials) {
  Matrix m;
  for (const QuadMonomial& t : monomials) {
    const Rational c(t.coef);
    if (t.a == t.b) {
      m[t.a][t.a] += Rational(2) * c;
    } else {
      m[t.a][t.b] += c;
      m[t.b][t.a] += c;
    }
  }
  return QuadraticForm(m);
}

template <class Rng>
QuadraticForm QuadraticForm::random(Rng& rng, long max_num, long max_den) {
  Matrix m;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = i; j < kDim; ++j) {
      const Rational v = rng.rational(max_num, max_den);
      m[i][j] = v;
      m[j][i] = v;
    }
  }
  return QuadraticForm(m);
}

}  // namespace ksreg

#include "ksreg/quadratic_poisson.hpp"

#include <sstream>

namespace ksreg {
namespace {

constexpr std::size_t kDim = QuadraticForm::kDim;
constexpr std::array<const char*, kDim> kCoordNames{"q1", "q2", "q3", "q4", "p1", "p2", "p3", "p4"};

const std::array<QuadraticForm, kNumInvariants>& pi_forms() {
  static const auto forms = [] {
    std::array<QuadraticForm, kNumInvariants> f;
    for (std::size_t i = 0; i < kNumInvariants; ++i) f[i] = QuadraticForm::from_monomials(kPiMonomials[i]);
    return f;
  }();
  return forms;
}

const std::array<QuadraticForm, kNumInvariants>& generator_forms() {
  static const auto forms = [] {
    std::array<QuadraticForm, kNumInvariants> f;
    const Rational half(1, 2);
    for (std::size_t i = 0; i < kNumInvariants; ++i) {
      for (std::size_t j = 0; j < kNumInvariants; ++j) {
        if (kGeneratorFromPi[i][j] != 0) f[i] += (half * Rational(kGeneratorFromPi[i][j])) * pi_forms()[j];
      }
    }
    return f;
  }();
  return forms;
}

// inverse[i][j]: coefficient of generator j in pi_{i+1}.
const std::array<GeneratorCombination, kNumInvariants>& pi_in_generators() {
  static const auto table = [] {
    std::array<GeneratorCombination, kNumInvariants> t;
    for (std::size_t j = 0; j < kNumInvariants; ++j) {
      Vec<Rational, kNumInvariants> unit{};
      unit[j] = Rational(1);
      const auto pis = pi_from_generators(GeneratorVector<Rational>::from_flat(unit));
      for (std::size_t i = 0; i < kNumInvariants; ++i) t[i][j] = pis[i];
    }
    return t;
  }();
  return table;
}

std::string term_string(const Rational& c, std::string_view name, bool first) {
  std::ostringstream os;
  Rational mag = abs(c);
  if (c.sign() < 0) os << (first ? "-" : " - ");
  else if (!first) os << " + ";
  if (mag != Rational(1)) os << mag << "*";
  os << name;
  return os.str();
}

}  // namespace

// QuadraticForm ---------------------------------------------------------------

QuadraticForm::QuadraticForm() = default;

QuadraticForm::QuadraticForm(const Matrix& coeffs) : a_(coeffs) {
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = i + 1; j < kDim; ++j) {
      if (a_[i][j] != a_[j][i]) throw std::invalid_argument("QuadraticForm: coefficient matrix is not symmetric");
    }
  }
}

QuadraticForm QuadraticForm::pi(std::size_t index) {
  if (index >= kNumInvariants) throw std::out_of_range("QuadraticForm::pi: index out of range");
  return pi_forms()[index];
}

QuadraticForm QuadraticForm::generator(Gen g) { return generator_forms()[static_cast<std::size_t>(g)]; }

Rational QuadraticForm::monomial_coeff(std::size_t i, std::size_t j) const {
  if (i == j) return a_[i][i] / Rational(2);
  return a_[i][j];
}

bool QuadraticForm::is_zero() const {
  for (const auto& row : a_) {
    for (const auto& v : row) {
      if (!v.is_zero()) return false;
    }
  }
  return true;
}

Rational QuadraticForm::evaluate(const PhasePoint8<Rational>& z) const {
  Rational s;
  for (std::size_t i = 0; i < kDim; ++i) {
    if (z[i].is_zero()) continue;
    Rational row;
    for (std::size_t j = 0; j < kDim; ++j) {
      if (!a_[i][j].is_zero()) row += a_[i][j] * z[j];
    }
    s += z[i] * row;
  }
  return s / Rational(2);
}

double QuadraticForm::evaluate(const Point8& z) const {
  double s = 0.0;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) s += z[i] * a_[i][j].to_double() * z[j];
  }
  return 0.5 * s;
}

std::array<Rational, QuadraticForm::kDim> QuadraticForm::gradient(const PhasePoint8<Rational>& z) const {
  std::array<Rational, kDim> g;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      if (!a_[i][j].is_zero()) g[i] += a_[i][j] * z[j];
    }
  }
  return g;
}

QuadraticForm& QuadraticForm::operator+=(const QuadraticForm& rhs) {
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      if (!rhs.a_[i][j].is_zero()) a_[i][j] += rhs.a_[i][j];
    }
  }
  return *this;
}

QuadraticForm& QuadraticForm::operator-=(const QuadraticForm& rhs) {
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = 0; j < kDim; ++j) {
      if (!rhs.a_[i][j].is_zero()) a_[i][j] -= rhs.a_[i][j];
    }
  }
  return *this;
}

QuadraticForm& QuadraticForm::operator*=(const Rational& s) {
  for (auto& row : a_) {
    for (auto& v : row) {
      if (!v.is_zero()) v *= s;
    }
  }
  return *this;
}

std::string QuadraticForm::to_polynomial_string() const {
  std::string out;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = i; j < kDim; ++j) {
      const Rational c = monomial_coeff(i, j);
      if (c.is_zero()) continue;
      const std::string mono = i == j ? std::string(kCoordNames[i]) + "^2"
                                      : std::string(kCoordNames[i]) + "*" + kCoordNames[j];
      out += term_string(c, mono, out.empty());
    }
  }
  return out.empty() ? "0" : out;
}

QuadraticForm bracket(const QuadraticForm& f, const QuadraticForm& g) {
  // M = A J B with J = [[0, I], [-I, 0]]; the bracket matrix is M + M^T.
  const auto& a = f.coeffs();
  const auto& b = g.coeffs();
  QuadraticForm::Matrix m;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t k = 0; k < 4; ++k) {
      const Rational& aq = a[i][k];
      const Rational& ap = a[i][k + 4];
      if (aq.is_zero() && ap.is_zero()) continue;
      for (std::size_t j = 0; j < kDim; ++j) {
        if (!aq.is_zero() && !b[k + 4][j].is_zero()) m[i][j] += aq * b[k + 4][j];
        if (!ap.is_zero() && !b[k][j].is_zero()) m[i][j] -= ap * b[k][j];
      }
    }
  }
  QuadraticForm::Matrix c;
  for (std::size_t i = 0; i < kDim; ++i) {
    for (std::size_t j = i; j < kDim; ++j) {
      const Rational v = m[i][j] + m[j][i];
      c[i][j] = v;
      c[j][i] = v;
    }
  }
  return QuadraticForm(c);
}

// Generator basis -------------------------------------------------------------

std::optional<GeneratorCombination> try_decompose(const QuadraticForm& f) {
  // Each pi_i owns a monomial (its first) that no other pi_j contains, with
  // coefficient +1, so the pi-coordinates of f can be read off directly.
  std::array<Rational, kNumInvariants> pi_coeffs;
  QuadraticForm residual = f;
  for (std::size_t i = 0; i < kNumInvariants; ++i) {
    const auto& lead = kPiMonomials[i][0];
    pi_coeffs[i] = f.monomial_coeff(static_cast<std::size_t>(lead.a), static_cast<std::size_t>(lead.b));
    if (!pi_coeffs[i].is_zero()) residual -= pi_coeffs[i] * pi_forms()[i];
  }
  if (!residual.is_zero()) return std::nullopt;

  GeneratorCombination out{};
  const auto& inv = pi_in_generators();
  for (std::size_t i = 0; i < kNumInvariants; ++i) {
    if (pi_coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < kNumInvariants; ++j) {
      if (!inv[i][j].is_zero()) out[j] += pi_coeffs[i] * inv[i][j];
    }
  }
  return out;
}

GeneratorCombination decompose(const QuadraticForm& f) {
  auto c = try_decompose(f);
  if (!c) {
    throw DecompositionError("form is not in the span of the generators: " + f.to_polynomial_string());
  }
  return *c;
}

QuadraticForm compose(const GeneratorCombination& c) {
  QuadraticForm f;
  for (std::size_t i = 0; i < kNumInvariants; ++i) {
    if (!c[i].is_zero()) f += c[i] * generator_forms()[i];
  }
  return f;
}

std::string to_string(const GeneratorCombination& c) {
  std::string out;
  for (std::size_t i = 0; i < kNumInvariants; ++i) {
    if (!c[i].is_zero()) out += term_string(c[i], kGeneratorNames[i], out.empty());
  }
  return out.empty() ? "0" : out;
}

bool is_zero(const GeneratorCombination& c) {
  for (const auto& v : c) {
    if (!v.is_zero()) return false;
  }
  return true;
}

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // even permutations of (0, 1, 2)
  if ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) return 1;
  return -1;
}

// so(4) -----------------------------------------------------------------------

namespace {

// K and L combinations as 6-vectors (K1..K3, L1..L3).
using KLVector = std::array<Rational, 6>;

// Bilinear extension of {Ki,Kj} = 2 eps Lk, {Li,Lj} = 2 eps Lk, {Ki,Lj} = 2 eps Kk.
KLVector bracket_by_structure_constants(const KLVector& a, const KLVector& b) {
  KLVector r{};
  for (int i = 0; i < 6; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < 6; ++j) {
      if (b[j].is_zero()) continue;
      const Rational w = a[i] * b[j];
      const bool ai_is_k = i < 3;
      const bool bj_is_k = j < 3;
      for (int k = 0; k < 3; ++k) {
        const int eps = levi_civita(i % 3, j % 3, k);
        if (eps == 0) continue;
        const Rational c = Rational(2 * eps) * w;
        if (ai_is_k && bj_is_k) r[3 + k] += c;         // {K,K} -> L
        else if (!ai_is_k && !bj_is_k) r[3 + k] += c;  // {L,L} -> L
        else r[k] += c;                                // {K,L} and {L,K} -> K
      }
    }
  }
  return r;
}

GeneratorCombination from_kl(const KLVector& v) {
  GeneratorCombination g{};
  for (int i = 0; i < 6; ++i) g[i] = v[i];
  return g;
}

// xi_i (sign = +1) or eta_i (sign = -1) as a K/L vector.
KLVector reduced_coordinate(int i, int sign) {
  KLVector v{};
  v[i] = Rational(1, 2);
  v[3 + i] = Rational(sign, 2);
  return v;
}

std::optional<Rational> proportionality(const GeneratorCombination& value, const GeneratorCombination& target) {
  std::optional<Rational> lambda;
  for (std::size_t c = 0; c < kNumInvariants; ++c) {
    if (!target[c].is_zero()) {
      lambda = value[c] / target[c];
      break;
    }
  }
  if (!lambda) return is_zero(value) ? std::optional<Rational>(Rational(0)) : std::nullopt;
  for (std::size_t c = 0; c < kNumInvariants; ++c) {
    if (value[c] != *lambda * target[c]) return std::nullopt;
  }
  return lambda;
}

}  // namespace

So4Report verify_so4_relations() {
  So4Report report;
  report.all_match = true;
  const auto& forms = generator_forms();
  const auto k_form = [&](int i) { return forms[static_cast<std::size_t>(index_of(Gen::K1) + i)]; };
  const auto l_form = [&](int i) { return forms[static_cast<std::size_t>(index_of(Gen::L1) + i)]; };

  struct Family {
    const char* left;
    const char* right;
    bool left_k;
    bool right_k;
    int result_base;  // generator index of the first result component
  };
  const Family families[] = {
      {"K", "K", true, true, index_of(Gen::L1)},
      {"L", "L", false, false, index_of(Gen::L1)},
      {"K", "L", true, false, index_of(Gen::K1)},
  };
  for (const auto& fam : families) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const QuadraticForm a = fam.left_k ? k_form(i) : l_form(i);
        const QuadraticForm b = fam.right_k ? k_form(j) : l_form(j);
        const GeneratorCombination computed = decompose(bracket(a, b));
        GeneratorCombination expected{};
        for (int k = 0; k < 3; ++k) expected[fam.result_base + k] = Rational(2 * levi_civita(i, j, k));
        RelationCheck check;
        check.pair = "{" + std::string(fam.left) + std::to_string(i + 1) + "," + fam.right + std::to_string(j + 1) + "}";
        check.expected = to_string(expected);
        check.computed = to_string(computed);
        check.match = computed == expected;
        report.all_match = report.all_match && check.match;
        report.relations.push_back(std::move(check));
      }
    }
  }

  struct ReducedFamily {
    const char* name;
    int left_sign;
    int right_sign;
    int target_sign;  // 0: the claimed value is zero
    Rational claimed;
  };
  const ReducedFamily reduced[] = {
      {"xi-xi", 1, 1, 1, Rational(1)},
      {"eta-eta", -1, -1, -1, Rational(-1)},
      {"xi-eta", 1, -1, 0, Rational(0)},
  };
  for (const auto& fam : reduced) {
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (fam.target_sign != 0 && j <= i) continue;
        const KLVector a = reduced_coordinate(i, fam.left_sign);
        const KLVector b = reduced_coordinate(j, fam.right_sign);
        const GeneratorCombination value = decompose(bracket(compose(from_kl(a)), compose(from_kl(b))));
        const GeneratorCombination combined = from_kl(bracket_by_structure_constants(a, b));

        ScalarFactorCheck check;
        check.family = fam.name;
        const char* ln = fam.left_sign > 0 ? "xi" : "eta";
        const char* rn = fam.right_sign > 0 ? "xi" : "eta";
        check.pair = "{" + std::string(ln) + std::to_string(i + 1) + "," + rn + std::to_string(j + 1) + "}";
        check.claimed_factor = fam.claimed;
        check.computed = to_string(value);
        if (fam.target_sign == 0) {
          check.oracle_factor = is_zero(value) ? std::optional<Rational>(Rational(0)) : std::nullopt;
          check.combined_factor = is_zero(combined) ? std::optional<Rational>(Rational(0)) : std::nullopt;
        } else {
          KLVector target{};
          for (int k = 0; k < 3; ++k) {
            const int eps = levi_civita(i, j, k);
            if (eps == 0) continue;
            const KLVector c = reduced_coordinate(k, fam.target_sign);
            for (int m = 0; m < 6; ++m) target[m] += Rational(eps) * c[m];
          }
          check.oracle_factor = proportionality(value, from_kl(target));
          check.combined_factor = proportionality(combined, from_kl(target));
        }
        report.reduced.push_back(std::move(check));
      }
    }
  }
  return report;
}

// Induced vector fields ---------------------------------------------------------

bool InducedVectorField::is_zero() const {
  for (const auto& c : components) {
    if (!ksreg::is_zero(c)) return false;
  }
  return true;
}

std::string InducedVectorField::to_string() const {
  std::string out;
  for (std::size_t c = 0; c < kNumInvariants; ++c) {
    if (ksreg::is_zero(components[c])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + ksreg::to_string(components[c]) + ") d/d" + std::string(kGeneratorNames[c]);
  }
  return out.empty() ? "0" : out;
}

InducedVectorField induced_vector_field(Gen g) {
  InducedVectorField y{g, {}};
  const auto& forms = generator_forms();
  const QuadraticForm& gf = forms[static_cast<std::size_t>(g)];
  for (std::size_t c = 0; c < kNumInvariants; ++c) y.components[c] = decompose(bracket(forms[c], gf));
  return y;
}

std::vector<TableDiscrepancy> diff_against_reference_table() {
  std::vector<TableDiscrepancy> out;
  const auto& table = reference_vector_field_table();
  for (std::size_t gi = 0; gi < kNumInvariants; ++gi) {
    const InducedVectorField y = induced_vector_field(static_cast<Gen>(gi));
    std::array<GeneratorCombination, kNumInvariants> tabulated{};
    for (const TableTerm& t : table[gi]) {
      tabulated[static_cast<std::size_t>(t.target)][static_cast<std::size_t>(t.source)] += Rational(t.coef);
    }
    for (std::size_t c = 0; c < kNumInvariants; ++c) {
      if (tabulated[c] == y.components[c]) continue;
      out.push_back({"Y_" + std::string(kGeneratorNames[gi]), std::string(kGeneratorNames[c]), to_string(tabulated[c]),
                     to_string(y.components[c])});
    }
  }
  return out;
}

BracketTable bracket_table() {
  BracketTable t;
  const auto& forms = generator_forms();
  for (std::size_t a = 0; a < kNumInvariants; ++a) {
    for (std::size_t b = a + 1; b < kNumInvariants; ++b) {
      t.entries[a][b] = decompose(bracket(forms[a], forms[b]));
      for (std::size_t c = 0; c < kNumInvariants; ++c) t.entries[b][a][c] = -t.entries[a][b][c];
    }
  }
  return t;
}

}  // namespace ksreg

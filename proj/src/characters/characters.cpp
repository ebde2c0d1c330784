#include "boxcount/characters/characters.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "boxcount/errors.hpp"

namespace boxcount {

namespace {

ExponentVector two_d(std::size_t arity, int e1, int e2) {
  if (arity < 2) throw ArityError("two-dimensional characters need at least two slots");
  ExponentVector e(arity);
  e.set_doubled(0, 2 * e1);
  e.set_doubled(1, 2 * e2);
  return e;
}

ExponentVector box_weight(const Box& b) { return ExponentVector::from_integers({-b[0], -b[1], -b[2]}); }

LaurentPolynomial t_product_polynomial(std::size_t arity, std::initializer_list<std::size_t> slots) {
  LaurentPolynomial p = LaurentPolynomial::constant(1, arity);
  for (std::size_t s : slots) p = p.times_binomial(ExponentVector::unit(arity, s));
  return p;
}

// Cylinder box (row r, column c) of a leg along `axis` at its first slice.
ExponentVector leg_box_weight(int axis, int row, int column) {
  switch (axis) {
    case 0: return ExponentVector::from_integers({0, -(column - 1), -(row - 1)});
    case 1: return ExponentVector::from_integers({-(row - 1), 0, -(column - 1)});
    default: return ExponentVector::from_integers({-(column - 1), -(row - 1), 0});
  }
}

std::string describe(const ExponentVector& e) {
  std::string s = "t^(";
  for (std::size_t i = 0; i < e.arity(); ++i) {
    if (i) s += ",";
    const int d = e.doubled(i);
    s += d % 2 == 0 ? std::to_string(d / 2) : std::to_string(d) + "/2";
  }
  return s + ")";
}

}  // namespace

LaurentPolynomial char_2d(const Partition2D& lambda, std::size_t arity) {
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& [r, c] : lambda.boxes()) terms.push_back({two_d(arity, -(c - 1), -(r - 1)), 1});
  return LaurentPolynomial::from_terms(arity, std::move(terms));
}

LaurentPolynomial ext1_char(const Partition2D& lambda, const Partition2D& mu, Ext1Form form,
                            std::size_t arity) {
  if (form == Ext1Form::closed) {
    const LaurentPolynomial g_mu = char_2d(mu, arity);
    const LaurentPolynomial g_lambda_bar = char_2d(lambda, arity).dual();
    const LaurentPolynomial t12 = LaurentPolynomial::monomial(two_d(arity, 1, 1));
    return g_mu + t12 * g_lambda_bar - t_product_polynomial(arity, {0, 1}) * g_mu * g_lambda_bar;
  }
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& [i, j] : mu.boxes())
    terms.push_back({two_d(arity, -mu.arm(i, j), lambda.leg(i, j) + 1), 1});
  for (const auto& [i, j] : lambda.boxes())
    terms.push_back({two_d(arity, lambda.arm(i, j) + 1, -mu.leg(i, j)), 1});
  return LaurentPolynomial::from_terms(arity, std::move(terms));
}

LaurentPolynomial ext1_char_transposed(const Partition2D& lambda, const Partition2D& mu,
                                       std::size_t arity) {
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& [i, j] : mu.boxes())
    terms.push_back({two_d(arity, -mu.leg(i, j), lambda.arm(i, j) + 1), 1});
  for (const auto& [i, j] : lambda.boxes())
    terms.push_back({two_d(arity, lambda.leg(i, j) + 1, -mu.arm(i, j)), 1});
  return LaurentPolynomial::from_terms(arity, std::move(terms));
}

RationalFunction tangent_functional(const RationalFunction& g) {
  const RationalFunction g_bar = g.dual();
  const RationalFunction kappa2 = RationalFunction::monomial(ExponentVector::from_integers({1, 1, 1}));
  const RationalFunction p(t_product_polynomial(kDTArity, {0, 1, 2}));
  return g - kappa2 * g_bar - p * g * g_bar;
}

LaurentPolynomial tangent_functional(const LaurentPolynomial& g) {
  const LaurentPolynomial g_bar = g.dual();
  const LaurentPolynomial kappa2 = LaurentPolynomial::monomial(ExponentVector::from_integers({1, 1, 1}));
  return g - kappa2 * g_bar - t_product_polynomial(kDTArity, {0, 1, 2}) * (g * g_bar);
}

LaurentPolynomial char_3d(const std::vector<Box>& boxes) {
  std::vector<LaurentPolynomial::Term> terms;
  terms.reserve(boxes.size());
  for (const auto& b : boxes) terms.push_back({box_weight(b), 1});
  return LaurentPolynomial::from_terms(kDTArity, std::move(terms));
}

LaurentPolynomial tvir_3d(const Partition3D& pi) { return tangent_functional(char_3d(pi.boxes)); }

RationalFunction cylinder_char(const Partition2D& leg, int axis) {
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& [r, c] : leg.boxes()) terms.push_back({leg_box_weight(axis, r, c), 1});
  const auto slice = LaurentPolynomial::from_terms(kDTArity, std::move(terms));
  if (slice.is_zero()) return RationalFunction(LaurentPolynomial(kDTArity));
  return RationalFunction(slice) *
         RationalFunction::geometric(ExponentVector::unit(kDTArity, static_cast<std::size_t>(axis), -1));
}

RationalFunction legged_char(const LeggedPartition3D& pi) {
  std::vector<LaurentPolynomial::Term> finite;
  for (const auto& b : pi.overlap_boxes()) finite.push_back({box_weight(b), Rational(1 - pi.cylinder_count(b))});
  for (const auto& b : pi.deviation()) finite.push_back({box_weight(b), 1});
  RationalFunction g(LaurentPolynomial::from_terms(kDTArity, std::move(finite)));
  for (int axis = 0; axis < 3; ++axis) g += cylinder_char(pi.legs()[static_cast<std::size_t>(axis)], axis);
  return g;
}

LaurentPolynomial vertex_char(const LeggedPartition3D& pi) {
  std::vector<RationalFunction> parts{tangent_functional(legged_char(pi))};
  for (int axis = 0; axis < 3; ++axis) {
    const auto& leg = pi.legs()[static_cast<std::size_t>(axis)];
    if (!leg.empty()) parts.push_back(-tangent_functional(cylinder_char(leg, axis)));
  }
  const RationalFunction reduced = RationalFunction::sum(parts).reduced();
  if (!reduced.is_polynomial()) {
    throw InternalConsistencyError("vertex character did not reduce to a Laurent polynomial for " +
                                   pi.to_json().dump());
  }
  return reduced.numerator().embedded(kDTArity);
}

int vertex_truncation_size(const LeggedPartition3D& pi) { return 2 * pi.extent() + 6; }

LaurentPolynomial vertex_char_truncated(const LeggedPartition3D& pi, int n) {
  std::vector<Box> all;
  std::array<std::vector<Box>, 3> cylinders;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const Box x{a, b, c};
        if (pi.contains(x)) all.push_back(x);
        for (int axis = 0; axis < 3; ++axis)
          if (pi.in_cylinder(axis, x)) cylinders[static_cast<std::size_t>(axis)].push_back(x);
      }
  LaurentPolynomial t = tangent_functional(char_3d(all));
  for (const auto& cyl : cylinders)
    if (!cyl.empty()) t -= tangent_functional(char_3d(cyl));
  std::vector<LaurentPolynomial::Term> kept;
  for (const auto& term : t.terms()) {
    int sup = 0;
    for (std::size_t i = 0; i < kDTArity; ++i) sup = std::max(sup, std::abs(term.exponent.doubled(i)));
    if (sup <= n) kept.push_back(term);  // doubled sup-norm <= n means |exp| <= n/2
  }
  return LaurentPolynomial::from_sorted_terms(kDTArity, std::move(kept));
}

Substitution edge_chart_transition(int m, int mp) {
  Substitution s = Substitution::identity(kDTArity);
  s.set_monomial(0, ExponentVector::from_integers({-1, 0, 0}));
  s.set_monomial(1, ExponentVector::from_integers({-m, 1, 0}));
  s.set_monomial(2, ExponentVector::from_integers({-mp, 0, 1}));
  return s;
}

LaurentPolynomial edge_char(const Partition2D& lambda, int m, int mp) {
  if (lambda.empty()) return LaurentPolynomial(kDTArity);
  const RationalFunction f = tangent_functional(cylinder_char(lambda, 0));
  const RationalFunction parts[] = {f, f.specialize(edge_chart_transition(m, mp))};
  const RationalFunction reduced = RationalFunction::sum(parts).reduced();
  if (!reduced.is_polynomial()) {
    throw InternalConsistencyError("edge character for " + lambda.to_string() + " with degrees (" +
                                   std::to_string(m) + "," + std::to_string(mp) +
                                   ") did not reduce to a Laurent polynomial");
  }
  return reduced.numerator().embedded(kDTArity);
}

int edge_euler_characteristic(const Partition2D& lambda, int m, int mp) {
  int chi = 0;
  for (const auto& [r, c] : lambda.boxes()) chi += 1 - m * (c - 1) - mp * (r - 1);
  return chi;
}

RationalFunction ahat(const LaurentPolynomial& character) {
  const std::size_t arity = character.arity();
  ExponentVector shift(arity);
  int sign = 1;
  std::map<ExponentVector, int> net;
  for (const auto& t : character.terms()) {
    if (t.coefficient.get_den() != 1 || !t.coefficient.get_num().fits_sint_p())
      throw std::domain_error("ahat needs integer multiplicities");
    const int k = static_cast<int>(t.coefficient.get_num().get_si());
    const ExponentVector& w = t.exponent;
    if (w.is_zero()) {
      if (k > 0) return RationalFunction(LaurentPolynomial(arity));
      throw DegeneracyError("ahat pole at the trivial weight", "multiplicity " + std::to_string(k));
    }
    if (!w.is_integral()) throw std::domain_error("ahat needs integral weights, got " + describe(w));
    // w^(1/2) - w^(-1/2) = s * m^(-1/2) * (1 - m), m canonical, s = -1 iff w = m.
    const bool canonical = w.is_positive();
    const ExponentVector m = canonical ? w : -w;
    if (canonical && k % 2 != 0) sign = -sign;
    ExponentVector half(arity);
    for (std::size_t i = 0; i < arity; ++i) half.set_doubled(i, -(m.doubled(i) / 2) * k);
    shift += half;
    net[m] += k;
  }
  RationalFunction r = RationalFunction::monomial(shift, sign);
  for (const auto& [m, k] : net) r = r.times_binomial_power(m, k);
  return r;
}

FactoredRational euler_cohomological(const LaurentPolynomial& character) {
  const std::size_t arity = character.arity();
  LaurentPolynomial numerator = LaurentPolynomial::constant(1, arity);
  FactoredRational result = FactoredRational::constant(1, arity);
  for (const auto& t : character.terms()) {
    if (t.coefficient.get_den() != 1) throw std::domain_error("euler class needs integer multiplicities");
    const long k = t.coefficient.get_num().get_si();
    std::vector<LaurentPolynomial::Term> form;
    for (std::size_t i = 0; i < arity; ++i) {
      const int a = t.exponent.integer(i);
      if (a != 0) form.push_back({ExponentVector::unit(arity, i), Rational(a)});
    }
    if (form.empty()) throw DegeneracyError("trivial weight in cohomological euler class", describe(t.exponent));
    const auto linear = LaurentPolynomial::from_terms(arity, std::move(form));
    if (k < 0) {
      numerator = numerator * linear.pow(static_cast<unsigned>(-k));
    } else {
      result *= FactoredRational::inverse_power(linear, static_cast<int>(k));
    }
  }
  return result * FactoredRational(numerator);
}

LaurentPolynomial cy_restrict(const LaurentPolynomial& character) {
  return calabi_yau_slice().apply(character);
}

long monomial_count(const LaurentPolynomial& character) {
  long n = 0;
  for (const auto& t : character.terms()) n += std::labs(t.coefficient.get_num().get_si());
  return n;
}

Rational rank(const LaurentPolynomial& character) { return character.sum_of_coefficients(); }

}  // namespace boxcount

#include <doctest.h>

#include <random>

#include "boxcount/characters/characters.hpp"
#include "boxcount/errors.hpp"
#include "helpers.hpp"

using namespace boxcount;
using namespace testing_support;

namespace {

LaurentPolynomial mono2(int a, int b) { return LaurentPolynomial::monomial(ExponentVector::from_integers({a, b})); }

LaurentPolynomial half_mono(std::initializer_list<int> doubled, const Rational& c = 1) {
  return LaurentPolynomial::monomial(ExponentVector::from_doubled(doubled), c);
}

LaurentPolynomial linear(int a, int b, int c) {
  std::vector<LaurentPolynomial::Term> t;
  if (a) t.push_back({ex({1, 0, 0}), Rational(a)});
  if (b) t.push_back({ex({0, 1, 0}), Rational(b)});
  if (c) t.push_back({ex({0, 0, 1}), Rational(c)});
  return LaurentPolynomial::from_terms(3, std::move(t));
}

// Independent arm/leg evaluation straight from the box coordinates.
LaurentPolynomial ext1_direct(const Partition2D& lambda, const Partition2D& mu) {
  const Partition2D lc = lambda.conjugate(), mc = mu.conjugate();
  LaurentPolynomial out(2);
  for (int i = 1; i <= mu.length(); ++i)
    for (int j = 1; j <= mu.part(i); ++j)
      out += mono2(-(mu.part(i) - j), (lc.part(j) - i) + 1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j)
      out += mono2(lambda.part(i) - j + 1, -(mc.part(j) - i));
  return out;
}

long positive_count(const LaurentPolynomial& p) {
  long n = 0;
  for (const auto& t : p.terms())
    if (t.coefficient > 0) n += t.coefficient.get_num().get_si();
  return n;
}

std::vector<Partition2D> small_partitions(int n) { return enumerate_partitions_up_to(n); }

}  // namespace

TEST_CASE("two-dimensional generating function") {
  CHECK(char_2d(Partition2D()).is_zero());
  CHECK(char_2d(Partition2D({1})) == LaurentPolynomial::constant(1, 2));
  CHECK(char_2d(Partition2D({2, 1})) == LaurentPolynomial::constant(1, 2) + mono2(-1, 0) + mono2(0, -1));
  for (const auto& p : small_partitions(6)) CHECK(monomial_count(char_2d(p)) == p.size());
}

TEST_CASE("Ext1 character examples") {
  const Partition2D e, one({1});
  for (auto form : {Ext1Form::closed, Ext1Form::arms_legs}) {
    CHECK(ext1_char(e, one, form) == LaurentPolynomial::constant(1, 2));
    CHECK(ext1_char(one, e, form) == mono2(1, 1));
    CHECK(ext1_char(one, one, form) == mono2(1, 0) + mono2(0, 1));
    CHECK(ext1_char(e, e, form).is_zero());
  }
}

TEST_CASE("Ext1 closed and arm-leg forms agree") {
  const auto parts = small_partitions(6);
  for (const auto& lambda : parts) {
    for (const auto& mu : parts) {
      const auto closed = ext1_char(lambda, mu, Ext1Form::closed);
      CHECK(closed == ext1_char(lambda, mu, Ext1Form::arms_legs));
      CHECK(closed == ext1_direct(lambda, mu));
      CHECK(monomial_count(closed) == lambda.size() + mu.size());
      CHECK(positive_count(closed) == lambda.size() + mu.size());
    }
  }
  // The transposed variant is a canary and must differ.
  const Partition2D two({2}), e;
  CHECK_FALSE(ext1_char_transposed(two, e) == ext1_char(two, e, Ext1Form::closed));
}

TEST_CASE("virtual tangent character of finite partitions") {
  CHECK(tvir_3d(Partition3D{}).is_zero());
  const LaurentPolynomial one_box = mono({1, 0, 0}) + mono({0, 1, 0}) + mono({0, 0, 1}) - mono({1, 1, 0}) -
                                    mono({1, 0, 1}) - mono({0, 1, 1});
  CHECK(tvir_3d(Partition3D{{{0, 0, 0}}}) == one_box);
  const auto two = tvir_3d(Partition3D{{{0, 0, 0}, {1, 0, 0}}});
  CHECK(monomial_count(two) == 12);
  CHECK(positive_count(two) == 6);
  CHECK(two.constant_term() == 0);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& pi : enumerate_plane_partitions(n)) {
      const auto t = tvir_3d(pi);
      CHECK(t.constant_term() == 0);
      CHECK(2 * positive_count(t) == monomial_count(t));
      CHECK(rank(t) == 0);
    }
  }
}

TEST_CASE("legged characters") {
  const Partition2D one({1}), e;
  const RationalFunction col1 = RationalFunction::geometric(ExponentVector::from_integers({-1, 0, 0}));
  const RationalFunction col2 = RationalFunction::geometric(ExponentVector::from_integers({0, -1, 0}));
  CHECK(legged_char(LeggedPartition3D({one, e, e}, {})) == col1);
  CHECK(legged_char(LeggedPartition3D({one, one, e}, {})) == col1 + col2 - RationalFunction(one3()));
  const Partition3D pi{{{0, 0, 0}, {0, 1, 0}, {1, 0, 0}}};
  CHECK(legged_char(LeggedPartition3D({}, pi.boxes)) == RationalFunction(char_3d(pi.boxes)));
}

TEST_CASE("vertex character without legs is the tangent character") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& pi : enumerate_plane_partitions(n))
      CHECK(vertex_char(LeggedPartition3D({}, pi.boxes)) == tvir_3d(pi));
}

TEST_CASE("vertex character matches the truncation oracle") {
  const Partition2D one({1}), two({2}), oo({1, 1}), tri({2, 1});
  const std::vector<std::array<Partition2D, 3>> legs{
      {one, {}, {}}, {one, one, {}}, {one, one, one}, {two, {}, one}, {tri, one, two}, {oo, two, tri}};
  for (const auto& l : legs) {
    for (const auto& pi : enumerate_legged(l, 2)) {
      const auto exact = vertex_char(pi);
      const int n = vertex_truncation_size(pi);
      CHECK(vertex_char_truncated(pi, n) == exact);
      CHECK(vertex_char_truncated(pi, n + 1) == exact);
      CHECK(exact.constant_term() == 0);
    }
  }
  const auto minimal = vertex_char(LeggedPartition3D({one, one, one}, {}));
  CHECK(minimal.constant_term() == 0);
}

TEST_CASE("vertex character is equivariant under the S(3) action on legs") {
  // Cycling the box coordinates cycles the legs and the torus variables.
  Substitution rotate(3, 3);
  rotate.set_monomial(0, ex({0, 0, 1})).set_monomial(1, ex({1, 0, 0})).set_monomial(2, ex({0, 1, 0}));
  const Partition2D one({1}), tri({2, 1}), two({2});
  const std::array<Partition2D, 3> legs{tri, one, two};
  const std::array<Partition2D, 3> cycled{legs[1], legs[2], legs[0]};
  const auto base = enumerate_legged(legs, 2);
  std::vector<LaurentPolynomial> images, direct;
  for (const auto& pi : base) images.push_back(rotate.apply(vertex_char(pi)));
  for (const auto& pi : enumerate_legged(cycled, 2)) direct.push_back(vertex_char(pi));
  std::sort(images.begin(), images.end());
  std::sort(direct.begin(), direct.end());
  CHECK(images == direct);
}

TEST_CASE("edge character examples") {
  const Partition2D one({1});
  CHECK(edge_char(Partition2D(), 0, 0).is_zero());
  CHECK(edge_char(one, 0, 0) == mono({0, 1, 0}) + mono({0, 0, 1}));
  CHECK(edge_char(one, -1, -1).is_zero());
  CHECK(edge_euler_characteristic(one, 0, 0) == 1);
  CHECK(edge_euler_characteristic(one, -1, -1) == 1);
}

TEST_CASE("edge characters are finite with the expected rank") {
  const std::vector<std::pair<int, int>> framings{{0, 0}, {-1, -1}, {-2, 0}, {1, 1}, {0, -2}, {2, -3}};
  for (const auto& lambda : small_partitions(4)) {
    CHECK(rank(edge_char(lambda, 0, 0)) == 2 * lambda.size());
    for (const auto& [m, mp] : framings) {
      const auto e = edge_char(lambda, m, mp);
      CHECK(e.is_integral());
      // The structure sheaf glued over both charts has Euler characteristic chi.
      const RationalFunction g = cylinder_char(lambda, 0);
      const RationalFunction charts[] = {g, g.specialize(edge_chart_transition(m, mp))};
      const RationalFunction structure = RationalFunction::sum(charts).reduced();
      REQUIRE(structure.is_polynomial());
      CHECK(structure.numerator().sum_of_coefficients() == edge_euler_characteristic(lambda, m, mp));
    }
  }
}

TEST_CASE("ahat examples") {
  CHECK(ahat(LaurentPolynomial(3)) == RationalFunction::constant(1, 3));
  const auto a1 = ahat(mono({1, 0, 0}));
  CHECK(a1 == RationalFunction(half_mono({1, 0, 0}) - half_mono({-1, 0, 0})));
  const auto q = half_mono({1, 0, 0}) - half_mono({-1, 0, 0});
  CHECK(ahat(mono({1, 0, 0}) + mono({-1, 0, 0})) == RationalFunction(-(q * q)));
  CHECK(ahat(mono({-1, 0, 0})) == RationalFunction(-q));
  CHECK(ahat(-mono({0, 1, 0})).inverse() == ahat(mono({0, 1, 0})));
  CHECK(ahat(one3() + mono({1, 0, 0})).is_zero());
  CHECK_THROWS_AS(ahat(-one3() + mono({1, 0, 0})), DegeneracyError);
  CHECK_THROWS_AS(ahat(half_mono({1, 0, 0})), std::domain_error);
  // Trivial weights that cancel out are harmless.
  CHECK(ahat(one3() - one3() + mono({0, 0, 1})) == ahat(mono({0, 0, 1})));
}

TEST_CASE("ahat is multiplicative and twists under duality") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = random_poly(rng, 4), b = random_poly(rng, 4);
    a -= LaurentPolynomial::constant(a.constant_term(), 3);
    b -= LaurentPolynomial::constant(b.constant_term(), 3);
    const auto lhs = ahat(a + b);
    const auto rhs = ahat(a) * ahat(b);
    CHECK(lhs == rhs);
    const auto r = rank(a);
    const int sign = r.get_num().get_si() % 2 == 0 ? 1 : -1;
    CHECK(ahat(a.dual()) == sign * ahat(a));
    // Pointwise check of the same identity at a random point.
    const auto point = random_point(rng);
    Rational expected = 1;
    bool degenerate = false;
    const auto sum = a + b;
    for (const auto& t : sum.terms()) {
      const Rational sqrt_w = point.monomial(ExponentVector::from_doubled(
          {t.exponent.doubled(0) / 2, t.exponent.doubled(1) / 2, t.exponent.doubled(2) / 2}));
      const Rational factor = sqrt_w - 1 / sqrt_w;
      if (factor == 0) degenerate = true;
      if (!degenerate) expected *= rational_pow(factor, t.coefficient.get_num().get_si());
    }
    if (!degenerate) CHECK(lhs.evaluate(point) == expected);
  }
}

TEST_CASE("cohomological Euler class") {
  const auto single = euler_cohomological(tvir_3d(Partition3D{{{0, 0, 0}}}));
  const auto expected = FactoredRational(linear(1, 1, 0) * linear(1, 0, 1) * linear(0, 1, 1)) *
                        FactoredRational::inverse_power(linear(1, 0, 0), 1) *
                        FactoredRational::inverse_power(linear(0, 1, 0), 1) *
                        FactoredRational::inverse_power(linear(0, 0, 1), 1);
  CHECK(single == expected);
  CHECK(euler_cohomological(mono({1, 0, 0}) - mono({1, 1, 0})) ==
        FactoredRational(linear(1, 1, 0)) * FactoredRational::inverse_power(linear(1, 0, 0), 1));
  CHECK_THROWS_AS(euler_cohomological(one3() + mono({1, 0, 0})), DegeneracyError);
}

TEST_CASE("Calabi-Yau restriction of the finite vertex") {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& pi : enumerate_plane_partitions(n)) {
      const auto value = ahat(cy_restrict(-tvir_3d(pi)));
      CHECK(value == RationalFunction::constant(n % 2 == 0 ? 1 : -1, 3));
    }
  }
  CHECK(cy_restrict(mono({1, 1, 1})) == one3());
}

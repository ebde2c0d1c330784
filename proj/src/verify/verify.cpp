#include "boxcount/verify/verify.hpp"

#include <map>
#include <random>

#include "boxcount/algebra/factored.hpp"
#include "boxcount/algebra/render.hpp"
#include "boxcount/algebra/substitution.hpp"
#include "boxcount/characters/characters.hpp"
#include "boxcount/dtcount/dtcount.hpp"
#include "boxcount/errors.hpp"
#include "boxcount/parallel.hpp"
#include "boxcount/partitions/partition3d.hpp"

namespace boxcount {

nlohmann::json Report::to_json() const {
  nlohmann::json j{{"check", check}, {"order", order}, {"status", pass ? "pass" : "fail"}, {"witness", witness}};
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  if (!details.is_null()) j["details"] = details;
  return j;
}

namespace {

Report start(const std::string& check, int order) {
  Report r;
  r.check = check;
  r.order = order;
  r.pass = true;
  return r;
}

void fail(Report& r, nlohmann::json witness) {
  if (!r.pass) return;
  r.pass = false;
  r.witness = std::move(witness);
}

ExponentVector ev(int a, int b, int c) { return ExponentVector::from_integers({a, b, c}); }

// w^(1/2) - w^(-1/2) and its reciprocal -w^(1/2) / (1 - w), built directly.
LaurentPolynomial sinh_of(const ExponentVector& w) {
  const ExponentVector h = ExponentVector::from_doubled({w.doubled(0) / 2, w.doubled(1) / 2, w.doubled(2) / 2});
  return LaurentPolynomial::monomial(h) - LaurentPolynomial::monomial(-h);
}

RationalFunction inverse_sinh(const ExponentVector& w) {
  const ExponentVector h = ExponentVector::from_doubled({w.doubled(0) / 2, w.doubled(1) / 2, w.doubled(2) / 2});
  return RationalFunction::monomial(h, -1).times_binomial_power(w, -1);
}

const std::array<ExponentVector, 3> kSingles{ev(1, 0, 0), ev(0, 1, 0), ev(0, 0, 1)};
const std::array<ExponentVector, 3> kPairs{ev(1, 1, 0), ev(1, 0, 1), ev(0, 1, 1)};

RationalFunction ratio_a() {
  RationalFunction a = RationalFunction::constant(1, 3);
  for (const auto& w : kPairs) a *= RationalFunction(sinh_of(w));
  for (const auto& w : kSingles) a *= inverse_sinh(w);
  return a;
}

// Quantum integer [n] in kappa = (t1 t2 t3)^(1/2).
LaurentPolynomial quantum_integer(int n) {
  LaurentPolynomial q(3);
  for (int j = 0; j < n; ++j) {
    const int d = n - 1 - 2 * j;
    q = q + LaurentPolynomial::monomial(ExponentVector::from_doubled({d, d, d}));
  }
  return q;
}

Rational quantum_integer(int n, const Rational& kappa) {
  Rational q = 0;
  for (int j = 0; j < n; ++j) q += rational_pow(kappa, n - 1 - 2 * j);
  return q;
}

struct Resample {};

Rational sinh_at(const ExponentVector& w, const EvaluationPoint& p) {
  const ExponentVector h = ExponentVector::from_doubled({w.doubled(0) / 2, w.doubled(1) / 2, w.doubled(2) / 2});
  const Rational x = p.monomial(h);
  return x - 1 / x;
}

// a-hat product of a character at a point; any vanishing factor forces a new point.
Rational ahat_at(const LaurentPolynomial& t, const EvaluationPoint& p) {
  Rational value = 1;
  for (const auto& term : t.terms()) {
    const Rational s = sinh_at(term.exponent, p);
    if (s == 0) throw Resample{};
    value *= rational_pow(s, term.coefficient.get_num().get_si());
  }
  return value;
}

Rational ratio_a_at(const EvaluationPoint& p) {
  Rational num = 1, den = 1;
  for (const auto& w : kPairs) num *= sinh_at(w, p);
  for (const auto& w : kSingles) den *= sinh_at(w, p);
  if (den == 0 || num == 0) throw Resample{};
  return num / den;
}

ScalarSeries rhs_at(int order, const EvaluationPoint& p, bool flip_kappa) {
  ScalarSeries g(order);
  for (int k = 1; k <= order; ++k) {
    const EvaluationPoint pk = p.power(k);
    const Rational a = ratio_a_at(pk);
    Rational kappa = pk.sqrt_values[0] * pk.sqrt_values[1] * pk.sqrt_values[2];
    if (flip_kappa) kappa = -kappa;
    std::vector<Rational> c;
    for (int n = 1; k * n <= order; ++n) {
      c.push_back(-a * quantum_integer(n, kappa) / k);
      for (int pad = 1; pad < k && k * n + pad <= order; ++pad) c.emplace_back(0);
    }
    g = g + ScalarSeries::from_coefficients(k, std::move(c), order);
  }
  return g.exp();
}

EvaluationPoint random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(2, 40), den(1, 13);
  EvaluationPoint p;
  for (int i = 0; i < 3; ++i) {
    Rational v(num(rng), den(rng));
    v.canonicalize();
    p.sqrt_values.push_back(v);
  }
  return p;
}

}  // namespace

ScalarSeries mcmahon_series(int order) {
  ScalarSeries m = ScalarSeries::one(order);
  for (int n = 1; n <= order; ++n) {
    const ScalarSeries factor = ScalarSeries::from_coefficients(0, [&] {
      std::vector<Rational> c(static_cast<std::size_t>(n) + 1, Rational(0));
      c[0] = 1;
      c[static_cast<std::size_t>(n)] = -1;
      return c;
    }(), order).inverse();
    for (int k = 0; k < n; ++k) m = m * factor;
  }
  return m;
}

Report check_mcmahon(int order, std::optional<int> corrupt_at) {
  Report r = start("mcmahon", order);
  const ScalarSeries product = mcmahon_series(order);
  nlohmann::json counts = nlohmann::json::array();
  for (int n = 0; n <= order; ++n) {
    long count = static_cast<long>(enumerate_plane_partitions(n).size());
    if (corrupt_at && *corrupt_at == n) ++count;
    counts.push_back(count);
    if (product.coefficient(n) != count)
      fail(r, {{"coefficient", n}, {"enumerated", count}, {"product", render(product.coefficient(n))}});
  }
  r.details = {{"counts", counts}};
  return r;
}

BoxSeries nekrasov_rhs(int order, bool flip_kappa) {
  const RationalFunction a = ratio_a();
  std::vector<RationalFunction> c;
  for (int n = 1; n <= order; ++n) {
    const Rational sign = (flip_kappa && n % 2 == 0) ? -1 : 1;
    c.push_back(-(a * RationalFunction(quantum_integer(n))) * sign);
  }
  return plethystic_exp(BoxSeries::from_coefficients(1, std::move(c), order));
}

Report check_nekrasov_degree0(int order, const NekrasovCheck& options) {
  Report r = start("nekrasov-degree0", order);
  if (options.mode == EvalMode::exact) {
    const BoxSeries lhs = degree0_series(order);
    const BoxSeries rhs = nekrasov_rhs(order, options.flip_kappa);
    for (int n = 0; n <= order; ++n)
      if (!ratfun_equal(lhs.coefficient(n), rhs.coefficient(n))) fail(r, {{"coefficient", n}});
    r.details = {{"mode", "exact"}};
    return r;
  }
  r.seed = options.seed;
  std::vector<std::vector<LaurentPolynomial>> chars(static_cast<std::size_t>(order) + 1);
  for (const auto& pi : enumerate_legged({}, order)) chars[static_cast<std::size_t>(pi.regularized_size())].push_back(vertex_char(pi));
  std::mt19937_64 rng(options.seed);
  std::vector<EvaluationPoint> points;
  int resamples = 0;
  while (static_cast<int>(points.size()) < options.points) {
    const EvaluationPoint p = random_point(rng);
    try {
      ratio_a_at(p);
      for (const auto& group : chars)
        for (const auto& t : group) ahat_at(-t, p);
      for (int k = 1; k <= order; ++k) ratio_a_at(p.power(k));
      points.push_back(p);
    } catch (const Resample&) {
      ++resamples;
    }
  }
  const auto outcomes = parallel_map(points.size(), [&](std::size_t i) -> nlohmann::json {
    const EvaluationPoint& p = points[i];
    const ScalarSeries rhs = rhs_at(order, p, options.flip_kappa);
    for (int n = 0; n <= order; ++n) {
      Rational lhs = 0;
      for (const auto& t : chars[static_cast<std::size_t>(n)]) lhs += ahat_at(-t, p);
      if (n % 2 == 1) lhs = -lhs;
      if (lhs != rhs.coefficient(n)) {
        nlohmann::json at = nlohmann::json::array();
        for (const auto& q : p.sqrt_values) at.push_back(render(q));
        return {{"coefficient", n}, {"point", at}, {"lhs", render(lhs)}, {"rhs", render(rhs.coefficient(n))}};
      }
    }
    return nullptr;
  });
  for (const auto& o : outcomes)
    if (!o.is_null()) fail(r, o);
  r.details = {{"mode", "random"}, {"points", options.points}, {"resamples", resamples}};
  return r;
}

Report check_hilbC3(int order) {
  Report r = start("hilbC3", order);
  auto linear = [](int a, int b, int c) {
    LaurentPolynomial p(3);
    if (a) p = p + LaurentPolynomial::monomial(ev(1, 0, 0), a);
    if (b) p = p + LaurentPolynomial::monomial(ev(0, 1, 0), b);
    if (c) p = p + LaurentPolynomial::monomial(ev(0, 0, 1), c);
    return p;
  };
  const FactoredRational e = -(FactoredRational(linear(1, 1, 0) * linear(1, 0, 1) * linear(0, 1, 1)) *
                               FactoredRational::inverse_power(linear(1, 0, 0), 1) *
                               FactoredRational::inverse_power(linear(0, 1, 0), 1) *
                               FactoredRational::inverse_power(linear(0, 0, 1), 1));
  const ScalarSeries log_mc = mcmahon_series(order).log();
  std::vector<FactoredRational> exponent;
  for (int n = 0; n <= order; ++n) exponent.push_back(e * log_mc.coefficient(n));
  const CohomologicalSeries rhs = CohomologicalSeries::from_coefficients(0, std::move(exponent), order).exp();
  const CohomologicalSeries lhs = cohomological_degree0(order);
  for (int n = 0; n <= order; ++n)
    if (!(lhs.coefficient(n) == rhs.coefficient(n))) fail(r, {{"coefficient", n}, {"lhs", render(lhs.coefficient(n))}});
  // On c1 = 0 the exponent is 1 and both sides are Mc(z).
  const std::vector<LaurentPolynomial> slice{linear(1, 0, 0), linear(0, 1, 0), linear(-1, -1, 0)};
  const ScalarSeries mc = mcmahon_series(order);
  nlohmann::json restricted = nlohmann::json::array();
  for (int n = 0; n <= order; ++n) {
    try {
      const FactoredRational value = lhs.coefficient(n).reduced().substitute(slice);
      restricted.push_back(render(value.reduced()));
      if (!(value == FactoredRational::constant(mc.coefficient(n), 3)))
        fail(r, {{"coefficient", n}, {"restricted", render(value)}, {"expected", render(mc.coefficient(n))}});
    } catch (const DegeneracyError& err) {
      fail(r, {{"coefficient", n}, {"restriction", err.what()}});
    }
  }
  r.details = {{"c1_zero", restricted}};
  return r;
}

Report check_ext1_forms(int max_size, bool transposed_canary) {
  Report r = start("ext1", max_size);
  const auto parts = enumerate_partitions_up_to(max_size);
  const auto outcomes = parallel_map(parts.size(), [&](std::size_t i) -> nlohmann::json {
    for (const auto& mu : parts) {
      const auto closed = ext1_char(parts[i], mu, Ext1Form::closed);
      const auto other = transposed_canary ? ext1_char_transposed(parts[i], mu) : ext1_char(parts[i], mu, Ext1Form::arms_legs);
      if (closed != other) return {{"lambda", parts[i].to_string()}, {"mu", mu.to_string()}};
    }
    return nullptr;
  });
  for (const auto& o : outcomes)
    if (!o.is_null()) fail(r, o);
  r.details = {{"pairs", parts.size() * parts.size()}};
  return r;
}

Report check_cy_vertex(int order) {
  Report r = start("cy-vertex", order);
  const ScalarSeries mc = mcmahon_series(order);
  const Substitution slice = calabi_yau_slice();
  const BoxSeries s = degree0_series(order, slice);
  for (int n = 0; n <= order; ++n)
    if (!ratfun_equal(s.coefficient(n), RationalFunction::constant(mc.coefficient(n), 3)))
      fail(r, {{"legs", ";;"}, {"coefficient", n}});
  const int leg_order = std::min(order, 4);
  nlohmann::json goldens = nlohmann::json::object();
  for (const auto& leg : {Partition2D({1}), Partition2D({2, 1})}) {
    const Legs legs{leg, Partition2D(), Partition2D()};
    const BoxSeries v = vertex_series(legs, leg_order, slice);
    nlohmann::json values = nlohmann::json::array();
    for (int n = 0; n <= leg_order; ++n) {
      const RationalFunction c = v.coefficient(n).reduced();
      if (!c.is_zero() && !(c.is_polynomial() && c.numerator().is_constant())) {
        fail(r, {{"legs", legs_to_string(legs)}, {"coefficient", n}, {"value", render(c)}});
        values.push_back(nullptr);
        continue;
      }
      const Rational value = c.is_zero() ? Rational(0) : c.numerator().constant_term();
      if (value.get_den() != 1) fail(r, {{"legs", legs_to_string(legs)}, {"coefficient", n}, {"value", render(value)}});
      values.push_back(render(value));
    }
    goldens[legs_to_string(legs)] = values;
  }
  r.details = {{"leg_coefficients", goldens}};
  return r;
}

int DenominatorShape::degree() const {
  int d = 0;
  for (std::size_t k = 0; k < exponents.size(); ++k) d += static_cast<int>(k + 1) * exponents[k];
  return d;
}

ScalarSeries DenominatorShape::polynomial(int order) const {
  ScalarSeries d = ScalarSeries::one(order);
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    const int kk = static_cast<int>(k + 1);
    std::vector<Rational> c(static_cast<std::size_t>(kk) + 1, Rational(0));
    c[0] = 1;
    c[static_cast<std::size_t>(kk)] = (alternating && kk % 2 == 1) ? 1 : -1;
    const ScalarSeries factor = ScalarSeries::from_coefficients(0, std::move(c), order);
    const ScalarSeries inv = factor.inverse();
    for (int e = 0; e < std::abs(exponents[k]); ++e) d = d * (exponents[k] > 0 ? factor : inv);
  }
  return d;
}

nlohmann::json DenominatorShape::to_json() const { return {{"exponents", exponents}, {"alternating", alternating}}; }

BoxSeries as_box_series(const ScalarSeries& s) {
  std::vector<RationalFunction> c;
  for (const auto& x : s.coefficients()) c.push_back(RationalFunction::constant(x));
  return BoxSeries::from_coefficients(s.lower(), std::move(c), s.order());
}

BoxSeries RationalFit::expand(int order) const {
  const BoxSeries num = BoxSeries::from_coefficients(lower, numerator, order);
  const ScalarSeries inv = shape.polynomial(order - lower).inverse();
  return (num * as_box_series(inv)).truncated(order);
}

nlohmann::json RationalFit::to_json() const {
  nlohmann::json num = nlohmann::json::object();
  for (std::size_t i = 0; i < numerator.size(); ++i)
    if (!numerator[i].is_zero()) num[std::to_string(lower + static_cast<int>(i))] = boxcount::render(numerator[i]);
  return {{"shape", shape.to_json()}, {"numerator", num}, {"held_out", held_out}, {"text", render()}};
}

std::string RationalFit::render() const {
  std::string num = boxcount::render(BoxSeries::from_coefficients(lower, numerator, numerator_degree()));
  std::string den;
  for (std::size_t k = 0; k < shape.exponents.size(); ++k) {
    if (shape.exponents[k] == 0) continue;
    const int kk = static_cast<int>(k + 1);
    std::string base = shape.alternating ? "(-z)" : "z";
    if (kk > 1) base += "^" + std::to_string(kk);
    den += "(1 - " + base + ")";
    if (shape.exponents[k] != 1) den += "^" + std::to_string(shape.exponents[k]);
  }
  return den.empty() ? num : "(" + num + ")/(" + den + ")";
}

std::optional<RationalFit> rational_fit(const BoxSeries& s, const DenominatorShape& shape, int numerator_degree) {
  const int order = s.order();
  const int needed = numerator_degree + shape.degree() + 2;
  if (order < needed)
    throw InsufficientDataError("need more coefficients: order " + std::to_string(order) + " < " + std::to_string(needed));
  const int lower = std::min(s.valuation(), numerator_degree);
  const BoxSeries cleared = s * as_box_series(shape.polynomial(order - std::min(lower, 0)));
  for (int n = numerator_degree + 1; n <= order; ++n)
    if (!cleared.coefficient(n).is_zero()) return std::nullopt;
  RationalFit fit;
  fit.shape = shape;
  fit.lower = lower;
  for (int n = lower; n <= numerator_degree; ++n) fit.numerator.push_back(cleared.coefficient(n));
  fit.held_out = {order - 1, order};
  // Trim to the actual support.
  while (!fit.numerator.empty() && fit.numerator.back().is_zero()) fit.numerator.pop_back();
  std::size_t first = 0;
  while (first < fit.numerator.size() && fit.numerator[first].is_zero()) ++first;
  fit.numerator.erase(fit.numerator.begin(), fit.numerator.begin() + static_cast<long>(first));
  fit.lower += static_cast<int>(first);
  return fit;
}

namespace {

void shapes_of_degree(int remaining, int k, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (k > remaining) return;
  for (int a = remaining / k; a >= 0; --a) {
    current.push_back(a);
    shapes_of_degree(remaining - a * k, k + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::optional<RationalFit> search_rational_fit(const BoxSeries& s, int max_degree, bool alternating) {
  const int lowest = s.is_zero() ? 0 : s.lower();
  bool admissible = false;
  for (int degree = 0; degree <= max_degree; ++degree) {
    std::vector<std::vector<int>> shapes;
    std::vector<int> current;
    shapes_of_degree(degree, 1, current, shapes);
    for (auto& exps : shapes) {
      while (!exps.empty() && exps.back() == 0) exps.pop_back();
      const DenominatorShape shape{exps, alternating};
      for (int d = lowest; d + degree + 2 <= s.order(); ++d) {
        admissible = true;
        if (auto fit = rational_fit(s, shape, d)) return fit;
      }
    }
  }
  if (!admissible) throw InsufficientDataError("need more coefficients for any denominator shape");
  return std::nullopt;
}

std::pair<int, std::vector<RationalFunction>> parity_residual(const RationalFit& r, int virdim) {
  int epsilon = 1;
  for (std::size_t k = 0; k < r.shape.exponents.size(); ++k) {
    const int kk = static_cast<int>(k + 1);
    const int factor = (r.shape.alternating && kk % 2 == 1) ? 1 : -1;
    if (factor == -1 && r.shape.exponents[k] % 2 != 0) epsilon = -epsilon;
  }
  const int d = r.shape.degree();
  const Rational twist = virdim % 2 == 0 ? 1 : -1;
  std::map<int, RationalFunction> diff;
  for (std::size_t i = 0; i < r.numerator.size(); ++i) {
    const int e = r.lower + static_cast<int>(i);
    diff[d - e] += r.numerator[i] * Rational(epsilon);
    diff[e - virdim] -= r.numerator[i] * twist;
  }
  std::vector<RationalFunction> out;
  int offset = 0;
  for (const auto& [e, c] : diff) {
    if (out.empty() && c.is_zero()) continue;
    if (out.empty()) offset = e;
    while (offset + static_cast<int>(out.size()) < e) out.push_back(RationalFunction());
    out.push_back(c);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return {offset, out};
}

Report parity_check(const RationalFit& r, int virdim) {
  Report rep = start("parity", virdim);
  const auto [offset, residual] = parity_residual(r, virdim);
  if (!residual.empty()) {
    nlohmann::json res = nlohmann::json::object();
    for (std::size_t i = 0; i < residual.size(); ++i)
      if (!residual[i].is_zero()) res[std::to_string(offset + static_cast<int>(i))] = render(residual[i]);
    fail(rep, {{"residual", res}, {"fit", r.render()}});
  }
  rep.details = {{"fit", r.render()}, {"virdim", virdim}};
  return rep;
}

}  // namespace boxcount

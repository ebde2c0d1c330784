#include "boxcount/nekrasov/nekrasov.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "boxcount/algebra/render.hpp"
#include "boxcount/characters/characters.hpp"
#include "boxcount/errors.hpp"
#include "boxcount/parallel.hpp"

namespace boxcount {

namespace {

int total_rank(const std::vector<int>& ranks) {
  int r = 0;
  for (int x : ranks) r += x;
  return r;
}

bool is_trivial_mass(const std::string& name) { return name.empty() || name == "1"; }

// Tuple and framing of one factor, with -1 standing for the trivial factor.
struct Side {
  std::vector<Partition2D> partitions;
  std::vector<ExponentVector> framing;
};

Side side_of(const GaugeSpec& g, const GaugeConfiguration& config, int factor) {
  if (factor < 0) return {{Partition2D()}, {ExponentVector(g.arity())}};
  Side s;
  s.partitions = config[static_cast<std::size_t>(factor)];
  for (int k = 0; k < g.ranks[static_cast<std::size_t>(factor)]; ++k) s.framing.push_back(g.framing(factor, k));
  return s;
}

// sum over (a, b) of (u * f_b / f_a) * Ext^1(lambda_a, mu_b).
LaurentPolynomial pairing(const Side& left, const Side& right, const ExponentVector& u) {
  const std::size_t arity = u.arity();
  LaurentPolynomial out(arity);
  for (std::size_t a = 0; a < left.partitions.size(); ++a)
    for (std::size_t b = 0; b < right.partitions.size(); ++b)
      out += ext1_char(left.partitions[a], right.partitions[b], Ext1Form::closed, arity)
                 .times_monomial(u + right.framing[b] - left.framing[a]);
  return out;
}

}  // namespace

void GaugeSpec::validate() const {
  if (ranks.empty()) throw ParseError("gauge spec needs at least one factor");
  for (int r : ranks)
    if (r < 1) throw ParseError("gauge factor ranks must be positive, got " + std::to_string(r));
  const int factors = static_cast<int>(ranks.size());
  for (const auto& m : matter) {
    if (m.left < -1 || m.left >= factors || m.right < -1 || m.right >= factors)
      throw ParseError("matter factor index out of range");
    if (m.left < 0 && m.right < 0) throw ParseError("matter needs at least one gauge factor");
  }
  if (!instanton_names.empty() && instanton_names.size() != ranks.size())
    throw ParseError("one instanton name per gauge factor");
  if (order < 0) throw ParseError("order must be non-negative");
  if (2 + static_cast<std::size_t>(total_rank(ranks)) + mass_names().size() > kMaxVariables)
    throw ParseError("gauge spec needs more than " + std::to_string(kMaxVariables) + " variables");
}

GaugeSpec GaugeSpec::from_json(const nlohmann::json& j) {
  GaugeSpec g;
  try {
    if (!j.is_object() || !j.contains("ranks")) throw ParseError("gauge spec needs \"ranks\"");
    g.ranks = j.at("ranks").get<std::vector<int>>();
    if (j.contains("matter")) {
      for (const auto& m : j.at("matter")) {
        MatterField f;
        f.left = m.at("i").is_null() ? -1 : m.at("i").get<int>();
        f.right = m.at("j").is_null() ? -1 : m.at("j").get<int>();
        f.mass = m.value("mass", std::string("1"));
        g.matter.push_back(f);
      }
    }
    if (j.contains("names")) g.instanton_names = j.at("names").get<std::vector<std::string>>();
    g.order = j.value("order", 0);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("gauge spec JSON: ") + e.what());
  }
  g.validate();
  return g;
}

nlohmann::json GaugeSpec::to_json() const {
  nlohmann::json m = nlohmann::json::array();
  for (const auto& f : matter) {
    m.push_back({{"i", f.left < 0 ? nlohmann::json(nullptr) : nlohmann::json(f.left)},
                 {"j", f.right < 0 ? nlohmann::json(nullptr) : nlohmann::json(f.right)},
                 {"mass", f.mass}});
  }
  nlohmann::json j{{"ranks", ranks}, {"matter", m}, {"order", order}};
  if (!instanton_names.empty()) j["names"] = instanton_names;
  return j;
}

std::vector<std::string> GaugeSpec::mass_names() const {
  std::vector<std::string> names;
  for (const auto& m : matter)
    if (!is_trivial_mass(m.mass) && std::find(names.begin(), names.end(), m.mass) == names.end())
      names.push_back(m.mass);
  return names;
}

std::size_t GaugeSpec::arity() const { return 2 + static_cast<std::size_t>(total_rank(ranks)) + mass_names().size(); }

ExponentVector GaugeSpec::framing(int factor, int index) const {
  std::size_t slot = 2;
  for (int i = 0; i < factor; ++i) slot += static_cast<std::size_t>(ranks[static_cast<std::size_t>(i)]);
  return ExponentVector::unit(arity(), slot + static_cast<std::size_t>(index));
}

ExponentVector GaugeSpec::mass(const std::string& name) const {
  if (is_trivial_mass(name)) return ExponentVector(arity());
  const auto names = mass_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("unknown mass " + name);
  return ExponentVector::unit(arity(), 2 + static_cast<std::size_t>(total_rank(ranks)) +
                                           static_cast<std::size_t>(it - names.begin()));
}

std::vector<std::string> GaugeSpec::variable_names() const {
  std::vector<std::string> names{"t1", "t2"};
  const bool single = ranks.size() == 1;
  for (std::size_t i = 0; i < ranks.size(); ++i)
    for (int k = 0; k < ranks[i]; ++k)
      names.push_back(single ? "a" + std::to_string(k + 1)
                             : "a" + std::to_string(i + 1) + "_" + std::to_string(k + 1));
  for (const auto& m : mass_names()) names.push_back(m);
  return names;
}

std::vector<std::string> GaugeSpec::resolved_instanton_names() const {
  if (!instanton_names.empty()) return instanton_names;
  if (ranks.size() == 1) return {"z"};
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ranks.size(); ++i) names.push_back("z" + std::to_string(i + 1));
  return names;
}

RationalFunction bbE(const Partition2D& lambda, const Partition2D& mu, const ExponentVector& u) {
  const auto weights = ext1_char(lambda, mu, Ext1Form::arms_legs, u.arity()).times_monomial(u);
  return interaction_weight(weights, false);
}

RationalFunction bbE_hat(const Partition2D& lambda, const Partition2D& mu, const ExponentVector& u) {
  const auto weights = ext1_char(lambda, mu, Ext1Form::arms_legs, u.arity()).times_monomial(u);
  return interaction_weight(weights, true);
}

LaurentPolynomial tangent_tuple(const FramedTuple& t) {
  if (t.partitions.size() != t.framing.size() || t.partitions.empty())
    throw std::invalid_argument("framed tuple needs one framing weight per partition");
  const Side s{t.partitions, t.framing};
  return pairing(s, s, ExponentVector(t.framing[0].arity()));
}

LaurentPolynomial fixed_point_character(const GaugeSpec& g, const GaugeConfiguration& config) {
  LaurentPolynomial chi(g.arity());
  for (const auto& m : g.matter)
    chi += pairing(side_of(g, config, m.left), side_of(g, config, m.right), g.mass(m.mass));
  for (int i = 0; i < static_cast<int>(g.ranks.size()); ++i) {
    const Side s = side_of(g, config, i);
    chi -= pairing(s, s, ExponentVector(g.arity()));
  }
  return chi;
}

RationalFunction interaction_weight(const LaurentPolynomial& character, bool symmetrized) {
  if (symmetrized) return ahat(character);
  const std::size_t arity = character.arity();
  RationalFunction r = RationalFunction::constant(1, arity);
  for (const auto& t : character.terms()) {
    if (t.coefficient.get_den() != 1) throw std::domain_error("interaction weights need integer multiplicities");
    const int k = static_cast<int>(t.coefficient.get_num().get_si());
    if (t.exponent.is_zero()) {
      if (k > 0) return RationalFunction(LaurentPolynomial(arity));
      throw DegeneracyError("pole at the trivial weight", "multiplicity " + std::to_string(k));
    }
    r = r.times_binomial_power(-t.exponent, k);
  }
  return r;
}

RationalFunction fixed_point_weight(const GaugeSpec& g, const GaugeConfiguration& config, bool symmetrized) {
  try {
    return interaction_weight(fixed_point_character(g, config), symmetrized);
  } catch (const DegeneracyError& e) {
    throw DegeneracyError(std::string(e.what()) + " at fixed point " + describe(config), describe(config));
  }
}

std::vector<std::vector<Partition2D>> partition_tuples(int r, int n) {
  std::vector<std::vector<Partition2D>> out;
  std::vector<Partition2D> current;
  std::function<void(int, int)> fill = [&](int slot, int left) {
    if (slot == r - 1) {
      for (const auto& p : enumerate_partitions(left)) {
        current.push_back(p);
        out.push_back(current);
        current.pop_back();
      }
      return;
    }
    for (int k = 0; k <= left; ++k) {
      for (const auto& p : enumerate_partitions(k)) {
        current.push_back(p);
        fill(slot + 1, left - k);
        current.pop_back();
      }
    }
  };
  if (r >= 1 && n >= 0) fill(0, n);
  return out;
}

std::string describe(const GaugeConfiguration& config) {
  std::string s;
  for (std::size_t i = 0; i < config.size(); ++i) {
    if (i) s += " | ";
    for (std::size_t k = 0; k < config[i].size(); ++k) {
      if (k) s += "; ";
      s += "(" + config[i][k].to_string() + ")";
    }
  }
  return s;
}

const RationalFunction& NekrasovSeries::coefficient(const std::vector<int>& degree) const {
  const auto it = coefficients.find(degree);
  if (it == coefficients.end()) throw std::out_of_range("instanton degree beyond the computed order");
  return it->second;
}

BoxSeries NekrasovSeries::as_series() const {
  if (instanton_names.size() != 1) throw std::logic_error("as_series needs a single gauge factor");
  std::vector<RationalFunction> c;
  for (int n = 0; n <= order; ++n) c.push_back(coefficient({n}));
  return BoxSeries::from_coefficients(0, std::move(c), order);
}

nlohmann::json NekrasovSeries::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [degree, value] : coefficients) {
    if (value.is_zero()) continue;
    terms.push_back({{"degree", degree}, {"value", boxcount::to_json(value)}, {"text", boxcount::render(value, variable_names)}});
  }
  return {{"instantons", instanton_names}, {"variables", variable_names}, {"order", order}, {"terms", terms}};
}

std::string NekrasovSeries::render() const {
  std::string out;
  for (const auto& [degree, value] : coefficients) {
    if (value.is_zero()) continue;
    std::string mono;
    for (std::size_t i = 0; i < degree.size(); ++i) {
      if (degree[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += instanton_names[i] + (degree[i] == 1 ? "" : "^" + std::to_string(degree[i]));
    }
    if (!out.empty()) out += " + ";
    const RationalFunction v = value.reduced();
    const std::string c = boxcount::render(v, variable_names);
    if (mono.empty()) {
      out += c;
    } else if (v.is_polynomial() && v.numerator().is_constant()) {
      out += c == "1" ? mono : c + "*" + mono;
    } else {
      out += "(" + c + ")*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

NekrasovSeries z_nekrasov(const GaugeSpec& g, int order, bool symmetrized) {
  g.validate();
  if (order < 0) throw std::invalid_argument("order must be non-negative");
  const std::size_t factors = g.ranks.size();
  // All multidegrees of total at most `order`.
  std::vector<std::vector<int>> degrees;
  std::vector<int> d(factors, 0);
  std::function<void(std::size_t, int)> walk = [&](std::size_t i, int left) {
    if (i == factors) {
      degrees.push_back(d);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      d[i] = k;
      walk(i + 1, left - k);
    }
    d[i] = 0;
  };
  walk(0, order);
  std::sort(degrees.begin(), degrees.end());

  const auto values = parallel_map(degrees.size(), [&](std::size_t idx) {
    const auto& degree = degrees[idx];
    std::vector<std::vector<std::vector<Partition2D>>> choices(factors);
    for (std::size_t i = 0; i < factors; ++i) choices[i] = partition_tuples(g.ranks[i], degree[i]);
    std::vector<RationalFunction> terms;
    GaugeConfiguration config(factors);
    std::function<void(std::size_t)> expand = [&](std::size_t i) {
      if (i == factors) {
        terms.push_back(fixed_point_weight(g, config, symmetrized));
        return;
      }
      for (const auto& t : choices[i]) {
        config[i] = t;
        expand(i + 1);
      }
    };
    expand(0);
    return RationalFunction::sum(terms);
  });

  NekrasovSeries s;
  s.instanton_names = g.resolved_instanton_names();
  s.variable_names = g.variable_names();
  s.order = order;
  for (std::size_t i = 0; i < degrees.size(); ++i) s.coefficients.emplace(degrees[i], values[i]);
  return s;
}

}  // namespace boxcount

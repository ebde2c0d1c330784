#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "boxcount/algebra/ratfun.hpp"
#include "boxcount/algebra/series.hpp"
#include "boxcount/partitions/partition2d.hpp"

namespace boxcount {

struct FramedTuple {
  std::vector<Partition2D> partitions;
  std::vector<ExponentVector> framing;
};

// Bifundamental matter between gauge factors `left` and `right` with mass
// monomial named `mass` ("1" for the trivial weight). Factor index -1 is
// the trivial rank-one factor, which puts fundamental matter on either side.
struct MatterField {
  int left = 0;
  int right = 0;
  std::string mass = "1";
  friend bool operator==(const MatterField&, const MatterField&) = default;
};

// Lattice layout: t1, t2, then one framing slot per unit of rank (factor by
// factor), then one slot per distinct mass name.
struct GaugeSpec {
  std::vector<int> ranks;
  std::vector<MatterField> matter;
  std::vector<std::string> instanton_names;  // defaults to z or z1, z2, ...
  int order = 0;

  // Throws ParseError on rank < 1, bad factor indices or too many slots.
  void validate() const;
  static GaugeSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  std::size_t arity() const;
  std::vector<std::string> mass_names() const;
  ExponentVector framing(int factor, int index) const;
  ExponentVector mass(const std::string& name) const;
  std::vector<std::string> variable_names() const;
  std::vector<std::string> resolved_instanton_names() const;
};

// prod over the weights w of u * Ext^1(lambda, mu) of (1 - w^-1).
RationalFunction bbE(const Partition2D& lambda, const Partition2D& mu, const ExponentVector& u);
// prod over the same weights of (w^(1/2) - w^(-1/2)).
RationalFunction bbE_hat(const Partition2D& lambda, const Partition2D& mu, const ExponentVector& u);

// sum over i, j of (a_j / a_i) * Ext^1(lambda_i, lambda_j).
LaurentPolynomial tangent_tuple(const FramedTuple& t);

// One partition tuple per gauge factor.
using GaugeConfiguration = std::vector<std::vector<Partition2D>>;

// Matter characters minus gauge tangent characters at a fixed point.
LaurentPolynomial fixed_point_character(const GaugeSpec& g, const GaugeConfiguration& config);

// prod (1 - w^-1)^k, or the a-hat product when symmetrized. Weights are
// combined first; a surviving trivial weight gives 0 for k > 0 and throws
// DegeneracyError for k < 0.
RationalFunction interaction_weight(const LaurentPolynomial& character, bool symmetrized);

RationalFunction fixed_point_weight(const GaugeSpec& g, const GaugeConfiguration& config, bool symmetrized);

// All r-tuples of partitions of total size n, in a fixed order.
std::vector<std::vector<Partition2D>> partition_tuples(int r, int n);

std::string describe(const GaugeConfiguration& config);

// Coefficients indexed by the instanton numbers of each factor; every
// multidegree with total at most `order` is present.
struct NekrasovSeries {
  std::vector<std::string> instanton_names;
  std::vector<std::string> variable_names;
  int order = 0;
  std::map<std::vector<int>, RationalFunction> coefficients;

  const RationalFunction& coefficient(const std::vector<int>& degree) const;
  // Single-factor series as a BoxSeries in z.
  BoxSeries as_series() const;
  nlohmann::json to_json() const;
  std::string render() const;
};

NekrasovSeries z_nekrasov(const GaugeSpec& g, int order, bool symmetrized);

}  // namespace boxcount

#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "boxcount/algebra/factored.hpp"
#include "boxcount/algebra/ratfun.hpp"
#include "boxcount/algebra/series.hpp"
#include "boxcount/partitions/partition2d.hpp"
#include "boxcount/partitions/partition3d.hpp"

namespace boxcount {

using Legs = std::array<Partition2D, 3>;

// Directives applied to every character before the a-hat map ("cy": the
// slice killing the canonical weight of vertex 0) and numeric values of
// torus variables applied to the resulting coefficients.
struct Specialization {
  bool cy = false;
  std::vector<std::pair<std::size_t, Rational>> values;

  // "cy" or "t<i>=<rational>"; throws ParseError.
  static Specialization parse(const std::vector<std::string>& directives);
  bool empty() const noexcept { return !cy && values.empty(); }
};

// A torus-fixed point. weights[s] is the tangent weight along slot s,
// i.e. the image of the local variable t_{s+1} in the global torus.
struct ToricVertex {
  std::string id;
  std::array<ExponentVector, 3> weights;
};

// A compact edge joins (v0, slot0) to (v1, slot1) and carries the normal
// degrees (m, m'): m pairs with slot0 + 1 and m' with slot0 + 2 (mod 3).
// An unbounded edge has no v1 and fixes the leg on (v0, slot0).
struct ToricEdge {
  int v0 = 0;
  int slot0 = 0;
  std::optional<int> v1;
  int slot1 = 0;
  int m = 0;
  int mp = 0;
  std::string q = "Q";
  int degree = 1;
  Partition2D boundary;
  // Derived: the leg at v1 is the transpose of the leg at v0.
  bool transposed = false;
  bool compact() const noexcept { return v1.has_value(); }
};

class ToricGraph {
 public:
  std::vector<ToricVertex> vertices;
  std::vector<ToricEdge> edges;

  // Checks weights against the edge data and derives the leg transposition;
  // throws ParseError on any inconsistency.
  void validate();

  static ToricGraph from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  // "C3", "P3", "P1cubed", "local_curve" (m, m'), "conifold", "Xn" (n).
  static ToricGraph builtin(const std::string& name, int a = 0, int b = 0);

  std::vector<std::string> q_names() const;
  int euler_characteristic() const { return static_cast<int>(vertices.size()); }
  int compact_edge_count() const;
  // Sum of the three weights at a vertex.
  ExponentVector canonical_weight(int vertex) const;
  bool is_calabi_yau() const;
  // Local (t1, t2, t3) at the vertex to the global torus.
  Substitution vertex_frame(int vertex) const;
  // Edge-local frame: t1 along the edge at v0, then slots slot0+1, slot0+2.
  Substitution edge_frame(const ToricEdge& e) const;
};

// Slice of the global torus killing the canonical weight of vertex 0.
Substitution canonical_slice(const ExponentVector& canonical);

// sum over legged pi of (-z)^|pi| ahat(-T_pi). `character_map` acts on the
// vertex character before the a-hat map. Exact through z^zorder.
BoxSeries vertex_series(const Legs& legs, int zorder, const std::optional<Substitution>& character_map = {});

// Contribution of a configuration without the sign and power of z.
RationalFunction vertex_term(const LeggedPartition3D& pi, const std::optional<Substitution>& character_map = {});

// (-z)^z_power * Q^q_power * value.
struct EdgeWeight {
  int z_power = 0;
  int q_power = 0;
  RationalFunction value;
};

EdgeWeight edge_weight(const Partition2D& lambda, int m, int mp, int degree,
                       const std::optional<Substitution>& character_map = {});

// Z-series graded by the exponents of the named degree variables.
struct GradedSeries {
  std::vector<std::string> q_names;
  std::vector<std::string> variable_names;
  int zorder = 0;
  std::map<std::vector<int>, BoxSeries> terms;

  // Zero series of the right order for an absent degree.
  BoxSeries coefficient(const std::vector<int>& degree) const;
  // All degree variables set to one Q.
  GradedSeries collapsed(const std::string& name = "Q") const;
  nlohmann::json to_json() const;
  std::string render() const;
};

// Caps are per degree variable; absent names default to cap 0.
GradedSeries z_partition_function(const ToricGraph& g, const std::map<std::string, int>& qcaps, int zorder,
                                  const Specialization& spec = {});

BoxSeries degree0_series(int zorder, const std::optional<Substitution>& character_map = {});

// sum_n (-z)^n sum_{|pi| = n} euler_cohomological(T_pi), in the s_i.
CohomologicalSeries cohomological_degree0(int zorder);

// Every degree divided by the degree-0 series.
GradedSeries dtpt_divide(const GradedSeries& full, int zorder);

// Numeric values of the specialization applied to a coefficient.
RationalFunction apply_values(const RationalFunction& r, const Specialization& spec);

}  // namespace boxcount

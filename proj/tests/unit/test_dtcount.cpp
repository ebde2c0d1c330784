#include <doctest.h>

#include "boxcount/characters/characters.hpp"
#include "boxcount/dtcount/dtcount.hpp"
#include "boxcount/errors.hpp"
#include "boxcount/parallel.hpp"
#include "helpers.hpp"

using namespace testing_support;

namespace {

RationalFunction ah(std::initializer_list<int> w) { return ahat(mono(w)); }

// McMahon coefficients prod (1 - z^k)^-k, straight from plane partition counts.
std::vector<Rational> mcmahon(int order) {
  std::vector<Rational> out;
  for (int n = 0; n <= order; ++n) out.emplace_back(static_cast<long>(enumerate_plane_partitions(n).size()));
  return out;
}

ScalarSeries constants(const BoxSeries& s) {
  std::vector<Rational> c;
  for (int n = 0; n <= s.order(); ++n) {
    const RationalFunction x = s.coefficient(n);
    REQUIRE((x.is_zero() || (x.is_polynomial() && x.numerator().is_constant())));
    c.push_back(x.is_zero() ? Rational(0) : x.numerator().constant_term());
  }
  return ScalarSeries::from_coefficients(0, std::move(c), s.order());
}

ScalarSeries power(const ScalarSeries& s, int k) {
  ScalarSeries out = ScalarSeries::one(s.order());
  for (int i = 0; i < k; ++i) out = out * s;
  return out;
}

Specialization cy() {
  Specialization s;
  s.cy = true;
  return s;
}

}  // namespace

TEST_CASE("single-box term of the degree-0 vertex") {
  const auto s = vertex_series(Legs{}, 1);
  CHECK(s.coefficient(0) == RationalFunction::constant(1, 3));
  const auto expected = -(ah({1, 1, 0}) * ah({1, 0, 1}) * ah({0, 1, 1})) * ahat(-(mono({1, 0, 0}) + mono({0, 1, 0}) + mono({0, 0, 1})));
  CHECK(s.coefficient(1) == expected);
  CHECK(degree0_series(0).coefficient(0) == RationalFunction::constant(1, 3));
  CHECK(series_equal(degree0_series(1), s));
}

TEST_CASE("Calabi-Yau degree-0 series counts plane partitions") {
  const int order = 6;
  const auto s = constants(degree0_series(order, calabi_yau_slice()));
  CHECK(series_equal(s, ScalarSeries::from_coefficients(0, mcmahon(order), order)));
  CHECK(s.coefficient(4) == 13);
}

TEST_CASE("one leg") {
  const Legs legs{Partition2D({1}), Partition2D(), Partition2D()};
  const auto s = vertex_series(legs, 3);
  CHECK(s.valuation() == 0);
  CHECK_FALSE(s.coefficient(0).is_zero());
  CHECK(s.coefficient(0) == RationalFunction::constant(1, 3));
  CHECK(series_equal(vertex_series(legs, 2), s.truncated(2)));
  // The Calabi-Yau series of a single leg is Mc(z) / (1 - z) up to sign conventions: check it via the counts.
  const auto counted = constants(vertex_series(legs, 4, calabi_yau_slice()));
  const auto mc = ScalarSeries::from_coefficients(0, mcmahon(4), 4);
  CHECK(series_equal(counted, mc * ScalarSeries::from_coefficients(0, {1, 1, 1, 1, 1}, 4)));
}

TEST_CASE("vertex series are covariant under permutations of the axes") {
  const Partition2D one({1}), tri({2, 1}), two({2});
  const Legs legs{tri, one, two};
  const int order = minimal_regularized_size(legs) + 2;
  Substitution rotate(3, 3);
  rotate.set_monomial(0, ex({0, 0, 1})).set_monomial(1, ex({1, 0, 0})).set_monomial(2, ex({0, 1, 0}));
  CHECK(series_equal(vertex_series(legs, order, rotate), vertex_series({legs[1], legs[2], legs[0]}, order)));
  Substitution swap(3, 3);
  swap.set_monomial(1, ex({0, 0, 1})).set_monomial(2, ex({0, 1, 0}));
  const Legs swapped{legs[0].conjugate(), legs[2].conjugate(), legs[1].conjugate()};
  CHECK(series_equal(vertex_series(legs, order, swap), vertex_series(swapped, order)));
}

TEST_CASE("edge weights") {
  const Partition2D one({1});
  const auto empty = edge_weight(Partition2D(), 0, 0, 1);
  CHECK(empty.z_power == 0);
  CHECK(empty.q_power == 0);
  CHECK(empty.value == RationalFunction::constant(1, 3));
  const auto flat = edge_weight(one, 0, 0, 1);
  CHECK(flat.z_power == 1);
  CHECK(flat.q_power == 1);
  CHECK(flat.value * ah({0, 1, 0}) * ah({0, 0, 1}) == RationalFunction::constant(1, 3));
  const auto conifold = edge_weight(one, -1, -1, 2);
  CHECK(conifold.z_power == 1);
  CHECK(conifold.q_power == 2);
  CHECK(conifold.value == RationalFunction::constant(1, 3));
  CHECK(edge_weight(Partition2D({2, 1}), -2, 0, 1).z_power == edge_euler_characteristic(Partition2D({2, 1}), -2, 0));
}

TEST_CASE("built-in geometries") {
  struct Expect {
    ToricGraph g;
    std::size_t vertices, edges;
    int m, mp;
    bool cy;
  };
  const std::vector<Expect> catalog{
      {ToricGraph::builtin("C3"), 1, 0, 0, 0, true},
      {ToricGraph::builtin("P3"), 4, 6, 1, 1, false},
      {ToricGraph::builtin("P1cubed"), 8, 12, 0, 0, false},
      {ToricGraph::builtin("local_curve", 0, 0), 2, 1, 0, 0, false},
      {ToricGraph::builtin("local_curve", 1, -3), 2, 1, 1, -3, true},
      {ToricGraph::builtin("conifold"), 2, 1, -1, -1, true},
      {ToricGraph::builtin("Xn", 4), 4, 3, -2, 0, true},
  };
  for (const auto& [g, nv, ne, m, mp, is_cy] : catalog) {
    CHECK(g.vertices.size() == nv);
    CHECK(g.euler_characteristic() == static_cast<int>(nv));
    CHECK(g.compact_edge_count() == static_cast<int>(ne));
    CHECK(g.is_calabi_yau() == is_cy);
    for (const auto& e : g.edges) {
      CHECK(e.m == m);
      CHECK(e.mp == mp);
      // Positively oriented frames always glue with a transposition.
      CHECK(e.transposed);
    }
    ToricGraph copy = ToricGraph::from_json(g.to_json());
    CHECK(copy.to_json() == g.to_json());
  }
  CHECK(ToricGraph::builtin("P1cubed").q_names() == std::vector<std::string>{"Q1", "Q2", "Q3"});
  CHECK(ToricGraph::builtin("Xn", 3).q_names() == std::vector<std::string>{"Q1", "Q2"});
  CHECK_THROWS_AS(ToricGraph::builtin("P5"), ParseError);
}

TEST_CASE("geometry JSON") {
  const auto ok = nlohmann::json::parse(R"({"vertices":[{"id":"a","weights":[[1,0,0],[0,1,0],[0,0,1]]},
      {"id":"b","weights":[[-1,0,0],[1,0,1],[1,1,0]]}],
      "edges":[{"v":["a","b"],"m":-1,"mp":-1,"Q":"Q"},{"v":["a"],"slot":1,"boundary":"1"}]})");
  const ToricGraph g = ToricGraph::from_json(ok);
  CHECK(g.compact_edge_count() == 1);
  CHECK(g.edges[0].transposed);
  CHECK(g.edges[1].boundary == Partition2D({1}));
  auto missing = ok;
  missing["edges"][0].erase("m");
  CHECK_THROWS_AS(ToricGraph::from_json(missing), ParseError);
  auto wrong = ok;
  wrong["edges"][0]["m"] = 0;
  CHECK_THROWS_AS(ToricGraph::from_json(wrong), ParseError);
  auto clash = ok;
  clash["edges"][1]["slot"] = 0;
  CHECK_THROWS_AS(ToricGraph::from_json(clash), ParseError);
  CHECK_THROWS_AS(ToricGraph::from_json(nlohmann::json::parse(R"({"vertices":[]})")), ParseError);
  CHECK_THROWS_AS(ToricGraph::from_json(nlohmann::json::parse("[1]")), ParseError);
  const auto x2 = ToricGraph::from_json(nlohmann::json::parse(R"({"builtin":"Xn","n":2,"boundaries":[{"v":0,"slot":2,"boundary":"2,1"}]})"));
  CHECK(x2.edges.size() == 2);
}

TEST_CASE("degree-0 part factorizes over the vertices") {
  const int order = 2;
  for (const auto& g : {ToricGraph::builtin("local_curve", 0, 0), ToricGraph::builtin("P3")}) {
    const auto z = z_partition_function(g, {}, order);
    REQUIRE(z.terms.size() == 1);
    BoxSeries expected = BoxSeries::one(order);
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
      expected = expected * degree0_series(order, g.vertex_frame(v));
    CHECK(series_equal(z.coefficient(std::vector<int>(z.q_names.size(), 0)), expected));
  }
  // On a Calabi-Yau geometry every vertex contributes the same count.
  const auto mc = ScalarSeries::from_coefficients(0, mcmahon(4), 4);
  const auto x3 = z_partition_function(ToricGraph::builtin("Xn", 3), {}, 4, cy());
  CHECK(series_equal(constants(x3.coefficient({0, 0})), power(mc, 3)));
  // Dividing out the points leaves 1.
  const auto quotient = dtpt_divide(x3, 4);
  CHECK(series_equal(quotient.coefficient({0, 0}), BoxSeries::one(4)));
}

TEST_CASE("conifold degree-1 term") {
  const ToricGraph g = ToricGraph::builtin("conifold");
  const int order = 6;
  const auto z = z_partition_function(g, {{"Q", 1}}, order, cy());
  // Direct assembly: one box on the edge, legs (1) at both ends.
  const Substitution slice = canonical_slice(g.canonical_weight(0));
  const ToricEdge& e = g.edges[0];
  Legs l0{}, l1{};
  l0[static_cast<std::size_t>(e.slot0)] = Partition2D({1});
  l1[static_cast<std::size_t>(e.slot1)] = Partition2D({1});
  const auto w = edge_weight(Partition2D({1}), e.m, e.mp, 1, slice.after(g.edge_frame(e)));
  const auto direct = (vertex_series(l0, order - 1, slice.after(g.vertex_frame(0))) *
                       vertex_series(l1, order - 1, slice.after(g.vertex_frame(1))))
                          .shifted(w.z_power)
                          .scaled(-w.value);
  CHECK(series_equal(z.coefficient({1}), direct.truncated(order)));
  // Points divided out, the curve class contributes -z/(1-z)^2.
  const auto pt = constants(dtpt_divide(z, order).coefficient({1}));
  for (int n = 1; n <= order; ++n) CHECK(pt.coefficient(n) == -n);
  CHECK(pt.coefficient(0) == 0);
}

TEST_CASE("degree caps are per variable") {
  const ToricGraph g = ToricGraph::builtin("Xn", 3);
  const auto z = z_partition_function(g, {{"Q1", 1}}, 2, cy());
  CHECK(z.terms.size() == 2);
  CHECK(z.terms.count({1, 0}) == 1);
  const auto both = z_partition_function(g, {{"Q1", 1}, {"Q2", 1}}, 2, cy());
  CHECK(both.terms.size() == 4);
  CHECK(series_equal(both.coefficient({1, 0}), z.coefficient({1, 0})));
  CHECK(both.collapsed().terms.size() == 3);
  CHECK(both.to_json().at("series").contains("Q1*Q2"));
}

TEST_CASE("boundary partitions on unbounded edges") {
  auto j = nlohmann::json::parse(R"({"builtin":"Xn","n":2,"boundaries":[{"v":0,"slot":2,"boundary":"1"},{"v":1,"slot":2,"boundary":"1"}]})");
  const ToricGraph g = ToricGraph::from_json(j);
  const auto z = z_partition_function(g, {}, 3, cy());
  BoxSeries expected = BoxSeries::one(3);
  const Substitution slice = canonical_slice(g.canonical_weight(0));
  for (int v = 0; v < 2; ++v) {
    Legs legs{};
    legs[2] = Partition2D({1});
    expected = expected * vertex_series(legs, 3, slice.after(g.vertex_frame(v)));
  }
  CHECK(series_equal(z.coefficient({0}), expected));
}

TEST_CASE("numeric specialization") {
  const auto spec = Specialization::parse({"cy", "t1=2", "t2=1/3"});
  CHECK(spec.cy);
  REQUIRE(spec.values.size() == 2);
  CHECK(spec.values[1].second == Rational(1, 3));
  CHECK_THROWS_AS(Specialization::parse({"t4=2"}), ParseError);
  CHECK_THROWS_AS(Specialization::parse({"t1=x"}), ParseError);
  CHECK_THROWS_AS(Specialization::parse({"t1=0"}), ParseError);
  const ToricGraph g = ToricGraph::builtin("local_curve", 0, 0);
  const auto plain = z_partition_function(g, {{"Q", 1}}, 1);
  const auto numeric = z_partition_function(g, {{"Q", 1}}, 1, Specialization::parse({"t1=4", "t2=9", "t3=1/4"}));
  Substitution at(3, 3);
  at.set_value(0, 4).set_value(1, 9).set_value(2, Rational(1, 4));
  const RationalFunction c = plain.coefficient({1}).coefficient(1);
  CHECK(numeric.coefficient({1}).coefficient(1) == c.specialize(at));
}

TEST_CASE("cohomological degree-0 series") {
  const auto s = cohomological_degree0(2);
  CHECK(s.coefficient(0) == FactoredRational::constant(1, 3));
  auto linear = [](int a, int b, int c) { return mono({1, 0, 0}, a) + mono({0, 1, 0}, b) + mono({0, 0, 1}, c); };
  // Linear forms are written in the s-variables as degree-one monomials.
  const auto expected = -(FactoredRational(linear(1, 1, 0) * linear(1, 0, 1) * linear(0, 1, 1)) *
                          FactoredRational::inverse_power(linear(1, 0, 0), 1) *
                          FactoredRational::inverse_power(linear(0, 1, 0), 1) *
                          FactoredRational::inverse_power(linear(0, 0, 1), 1));
  CHECK(s.coefficient(1) == expected);
}

TEST_CASE("serial and parallel assembly agree") {
  const ToricGraph g = ToricGraph::builtin("Xn", 3);
  set_worker_count(1);
  const auto serial = z_partition_function(g, {{"Q1", 1}, {"Q2", 1}}, 2).to_json().dump();
  set_worker_count(3);
  const auto parallel = z_partition_function(g, {{"Q1", 1}, {"Q2", 1}}, 2).to_json().dump();
  set_worker_count(1);
  CHECK(serial == parallel);
}

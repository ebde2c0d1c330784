#include <algorithm>
#include <set>

#include "boxcount/dtcount/dtcount.hpp"
#include "boxcount/errors.hpp"

namespace boxcount {

namespace {

ExponentVector weight(int a, int b, int c) { return ExponentVector::from_integers({a, b, c}); }

long det3(const std::array<ExponentVector, 3>& w) {
  auto x = [&](int i, int j) { return static_cast<long>(w[static_cast<std::size_t>(i)].doubled(static_cast<std::size_t>(j)) / 2); };
  return x(0, 0) * (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)) - x(0, 1) * (x(1, 0) * x(2, 2) - x(1, 2) * x(2, 0)) +
         x(0, 2) * (x(1, 0) * x(2, 1) - x(1, 1) * x(2, 0));
}

// Positively oriented frames make the leg matching across every edge a transposition.
ToricVertex oriented(std::string id, std::array<ExponentVector, 3> w) {
  if (det3(w) < 0) std::swap(w[1], w[2]);
  return {std::move(id), w};
}

// Integer k with a - b = k x, if any.
std::optional<int> multiple_of(const ExponentVector& diff, const ExponentVector& x) {
  std::optional<int> k;
  for (std::size_t i = 0; i < 3; ++i) {
    const int d = diff.doubled(i), xi = x.doubled(i);
    if (xi == 0) {
      if (d != 0) return std::nullopt;
      continue;
    }
    if (d % xi != 0) return std::nullopt;
    if (k && *k != d / xi) return std::nullopt;
    k = d / xi;
  }
  return k.value_or(0);
}

int slot_of(const ToricVertex& v, const ExponentVector& w) {
  for (int s = 0; s < 3; ++s)
    if (v.weights[static_cast<std::size_t>(s)] == w) return s;
  return -1;
}

// Connects two vertices sharing a tangent line, reading degrees off the weights.
ToricEdge join(const std::vector<ToricVertex>& vs, int a, int b, std::string q) {
  for (int s0 = 0; s0 < 3; ++s0) {
    const ExponentVector& x = vs[static_cast<std::size_t>(a)].weights[static_cast<std::size_t>(s0)];
    const int s1 = slot_of(vs[static_cast<std::size_t>(b)], -x);
    if (s1 < 0) continue;
    ToricEdge e;
    e.v0 = a;
    e.slot0 = s0;
    e.v1 = b;
    e.slot1 = s1;
    e.q = std::move(q);
    const auto& w0 = vs[static_cast<std::size_t>(a)].weights;
    const auto& w1 = vs[static_cast<std::size_t>(b)].weights;
    const ExponentVector y = w0[static_cast<std::size_t>((s0 + 1) % 3)], z = w0[static_cast<std::size_t>((s0 + 2) % 3)];
    for (int t = 0; t < 3; ++t) {
      if (t == s1) continue;
      const ExponentVector& w = w1[static_cast<std::size_t>(t)];
      for (int other = 0; other < 3; ++other) {
        if (other == t || other == s1) continue;
        const auto k = multiple_of(y - w, x), kp = multiple_of(z - w1[static_cast<std::size_t>(other)], x);
        if (k && kp) {
          e.m = *k;
          e.mp = *kp;
          return e;
        }
      }
    }
  }
  throw std::logic_error("built-in vertices do not share an edge");
}

Partition2D parse_partition(const nlohmann::json& j) {
  if (j.is_null()) return {};
  if (j.is_string()) return Partition2D::parse(j.get<std::string>());
  try {
    return Partition2D(j.get<std::vector<int>>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("partition: ") + e.what());
  }
}

int vertex_index(const nlohmann::json& ref, const std::vector<ToricVertex>& vs) {
  if (ref.is_number_integer()) {
    const int i = ref.get<int>();
    if (i < 0 || i >= static_cast<int>(vs.size())) throw ParseError("vertex index out of range");
    return i;
  }
  if (ref.is_string()) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (vs[i].id == ref.get<std::string>()) return static_cast<int>(i);
  }
  throw ParseError("unknown vertex reference " + ref.dump());
}

void add_boundaries(ToricGraph& g, const nlohmann::json& list) {
  for (const auto& b : list) {
    ToricEdge e;
    e.v0 = vertex_index(b.at("v"), g.vertices);
    e.slot0 = b.at("slot").get<int>();
    e.boundary = parse_partition(b.at("boundary"));
    g.edges.push_back(e);
  }
}

}  // namespace

void ToricGraph::validate() {
  if (vertices.empty()) throw ParseError("geometry needs at least one vertex");
  for (const auto& v : vertices) {
    for (const auto& w : v.weights) {
      if (w.arity() != 3 || !w.is_integral()) throw ParseError("vertex " + v.id + " needs three integral weights");
      if (w.is_zero()) throw ParseError("vertex " + v.id + " has a trivial tangent weight");
    }
    if (det3(v.weights) == 0) throw ParseError("vertex " + v.id + " has dependent tangent weights");
  }
  std::set<std::pair<int, int>> used;
  const int nv = static_cast<int>(vertices.size());
  for (auto& e : edges) {
    auto claim = [&](int v, int s) {
      if (v < 0 || v >= nv) throw ParseError("edge endpoint out of range");
      if (s < 0 || s > 2) throw ParseError("edge slot must be 0, 1 or 2");
      if (!used.insert({v, s}).second) throw ParseError("two edges on one vertex slot");
    };
    claim(e.v0, e.slot0);
    if (!e.compact()) continue;
    claim(*e.v1, e.slot1);
    if (e.degree < 1) throw ParseError("edge degree must be positive");
    if (e.q.empty()) throw ParseError("compact edge needs a degree variable");
    if (!e.boundary.empty()) throw ParseError("compact edges carry no boundary partition");
    const auto& w0 = vertices[static_cast<std::size_t>(e.v0)].weights;
    const auto& w1 = vertices[static_cast<std::size_t>(*e.v1)].weights;
    const ExponentVector x = w0[static_cast<std::size_t>(e.slot0)];
    if (w1[static_cast<std::size_t>(e.slot1)] != -x) throw ParseError("edge weights at the two ends are not inverse");
    const ExponentVector y = w0[static_cast<std::size_t>((e.slot0 + 1) % 3)] - x.scaled(e.m);
    const ExponentVector z = w0[static_cast<std::size_t>((e.slot0 + 2) % 3)] - x.scaled(e.mp);
    const ExponentVector& a = w1[static_cast<std::size_t>((e.slot1 + 1) % 3)];
    const ExponentVector& b = w1[static_cast<std::size_t>((e.slot1 + 2) % 3)];
    if (a == y && b == z) {
      e.transposed = false;
    } else if (a == z && b == y) {
      e.transposed = true;
    } else {
      throw ParseError("normal degrees (" + std::to_string(e.m) + "," + std::to_string(e.mp) +
                       ") do not match the vertex weights");
    }
  }
}

ToricGraph ToricGraph::from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw ParseError("geometry must be a JSON object");
    ToricGraph g;
    if (j.contains("builtin")) {
      const auto name = j.at("builtin").get<std::string>();
      if (name == "local_curve") {
        g = builtin(name, j.at("m").get<int>(), j.at("mp").get<int>());
      } else if (name == "Xn") {
        g = builtin(name, j.at("n").get<int>());
      } else {
        g = builtin(name);
      }
      if (j.contains("boundaries")) add_boundaries(g, j.at("boundaries"));
      g.validate();
      return g;
    }
    for (const auto& v : j.at("vertices")) {
      ToricVertex tv;
      tv.id = v.contains("id") ? (v.at("id").is_string() ? v.at("id").get<std::string>() : v.at("id").dump())
                               : std::to_string(g.vertices.size());
      const auto w = v.at("weights");
      if (w.size() != 3) throw ParseError("vertex needs three weights");
      for (std::size_t s = 0; s < 3; ++s) {
        const auto e = w[s].get<std::vector<int>>();
        if (e.size() != 3) throw ParseError("weights have three entries");
        tv.weights[s] = ExponentVector::from_integers(e);
      }
      g.vertices.push_back(tv);
    }
    for (const auto& e : j.at("edges")) {
      ToricEdge te;
      const auto& ends = e.at("v");
      const bool single = !ends.is_array() || ends.size() == 1;
      te.v0 = vertex_index(ends.is_array() ? ends[0] : ends, g.vertices);
      if (single) {
        te.slot0 = e.contains("slot") ? e.at("slot").get<int>() : e.at("slots")[0].get<int>();
        if (e.contains("boundary")) te.boundary = parse_partition(e.at("boundary"));
      } else {
        if (ends.size() != 2) throw ParseError("edge \"v\" lists one or two vertices");
        te.v1 = vertex_index(ends[1], g.vertices);
        if (!e.contains("m") || !e.contains("mp")) throw ParseError("compact edge needs \"m\" and \"mp\"");
        te.m = e.at("m").get<int>();
        te.mp = e.at("mp").get<int>();
        te.q = e.value("Q", std::string("Q"));
        te.degree = e.value("degree", 1);
        if (e.contains("slots")) {
          te.slot0 = e.at("slots")[0].get<int>();
          te.slot1 = e.at("slots")[1].get<int>();
        } else {
          const auto& w0 = g.vertices[static_cast<std::size_t>(te.v0)];
          const auto& w1 = g.vertices[static_cast<std::size_t>(*te.v1)];
          int found = 0;
          for (int s = 0; s < 3; ++s) {
            const int t = slot_of(w1, -w0.weights[static_cast<std::size_t>(s)]);
            if (t >= 0) {
              te.slot0 = s;
              te.slot1 = t;
              ++found;
            }
          }
          if (found != 1) throw ParseError("cannot infer edge slots; give \"slots\"");
        }
        if (e.contains("boundary") && !e.at("boundary").is_null()) throw ParseError("compact edges carry no boundary");
      }
      g.edges.push_back(te);
    }
    if (j.contains("boundaries")) add_boundaries(g, j.at("boundaries"));
    g.validate();
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("geometry JSON: ") + e.what());
  }
}

nlohmann::json ToricGraph::to_json() const {
  nlohmann::json vs = nlohmann::json::array();
  for (const auto& v : vertices) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : v.weights) w.push_back({x.integer(0), x.integer(1), x.integer(2)});
    vs.push_back({{"id", v.id}, {"weights", w}});
  }
  nlohmann::json es = nlohmann::json::array();
  for (const auto& e : edges) {
    if (e.compact()) {
      es.push_back({{"v", {e.v0, *e.v1}}, {"slots", {e.slot0, e.slot1}}, {"m", e.m}, {"mp", e.mp}, {"Q", e.q},
                    {"degree", e.degree}});
    } else {
      es.push_back({{"v", {e.v0}}, {"slot", e.slot0}, {"boundary", e.boundary.to_string()}});
    }
  }
  return {{"vertices", vs}, {"edges", es}};
}

ToricGraph ToricGraph::builtin(const std::string& name, int a, int b) {
  ToricGraph g;
  const ExponentVector e1 = weight(1, 0, 0), e2 = weight(0, 1, 0), e3 = weight(0, 0, 1);
  if (name == "C3") {
    g.vertices.push_back(oriented("0", {e1, e2, e3}));
  } else if (name == "local_curve" || name == "conifold") {
    const int m = name == "conifold" ? -1 : a, mp = name == "conifold" ? -1 : b;
    g.vertices.push_back(oriented("0", {e1, e2, e3}));
    g.vertices.push_back(oriented("1", {-e1, e2 - e1.scaled(m), e3 - e1.scaled(mp)}));
    g.edges.push_back(join(g.vertices, 0, 1, "Q"));
  } else if (name == "P3") {
    const std::array<ExponentVector, 4> chi{ExponentVector(3), e1, e2, e3};
    for (int i = 0; i < 4; ++i) {
      std::array<ExponentVector, 3> w;
      std::size_t k = 0;
      for (int j = 0; j < 4; ++j)
        if (j != i) w[k++] = chi[static_cast<std::size_t>(j)] - chi[static_cast<std::size_t>(i)];
      g.vertices.push_back(oriented(std::to_string(i), w));
    }
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) g.edges.push_back(join(g.vertices, i, j, "Q"));
  } else if (name == "P1cubed") {
    for (int v = 0; v < 8; ++v) {
      auto sign = [&](int k) { return (v >> k) & 1 ? -1 : 1; };
      g.vertices.push_back(oriented(std::to_string(v), {e1.scaled(sign(0)), e2.scaled(sign(1)), e3.scaled(sign(2))}));
    }
    for (int v = 0; v < 8; ++v)
      for (int k = 0; k < 3; ++k)
        if (!((v >> k) & 1)) g.edges.push_back(join(g.vertices, v, v | (1 << k), "Q" + std::to_string(k + 1)));
  } else if (name == "Xn") {
    if (a < 1) throw ParseError("Xn needs n >= 1");
    for (int k = 0; k < a; ++k) g.vertices.push_back(oriented(std::to_string(k), {weight(k + 1, -1, 0), weight(-k, 1, 0), e3}));
    for (int k = 0; k + 1 < a; ++k) g.edges.push_back(join(g.vertices, k, k + 1, "Q" + std::to_string(k + 1)));
  } else {
    throw ParseError("unknown built-in geometry \"" + name + "\"");
  }
  g.validate();
  return g;
}

std::vector<std::string> ToricGraph::q_names() const {
  std::set<std::string> names;
  for (const auto& e : edges)
    if (e.compact()) names.insert(e.q);
  return {names.begin(), names.end()};
}

int ToricGraph::compact_edge_count() const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [](const ToricEdge& e) { return e.compact(); }));
}

ExponentVector ToricGraph::canonical_weight(int vertex) const {
  const auto& w = vertices[static_cast<std::size_t>(vertex)].weights;
  return w[0] + w[1] + w[2];
}

bool ToricGraph::is_calabi_yau() const {
  for (int v = 1; v < static_cast<int>(vertices.size()); ++v)
    if (canonical_weight(v) != canonical_weight(0)) return false;
  return true;
}

Substitution ToricGraph::vertex_frame(int vertex) const {
  Substitution s(3, 3);
  const auto& w = vertices[static_cast<std::size_t>(vertex)].weights;
  for (std::size_t i = 0; i < 3; ++i) s.set_monomial(i, w[i]);
  return s;
}

Substitution ToricGraph::edge_frame(const ToricEdge& e) const {
  Substitution s(3, 3);
  const auto& w = vertices[static_cast<std::size_t>(e.v0)].weights;
  for (int i = 0; i < 3; ++i) s.set_monomial(static_cast<std::size_t>(i), w[static_cast<std::size_t>((e.slot0 + i) % 3)]);
  return s;
}

Substitution canonical_slice(const ExponentVector& canonical) {
  for (int j = 2; j >= 0; --j) {
    const int k = canonical.integer(static_cast<std::size_t>(j));
    if (k != 1 && k != -1) continue;
    ExponentVector image(3);
    for (std::size_t i = 0; i < 3; ++i)
      if (static_cast<int>(i) != j) image.set_doubled(i, -canonical.doubled(i) * k);
    Substitution s = Substitution::identity(3);
    s.set_monomial(static_cast<std::size_t>(j), image);
    return s;
  }
  throw std::invalid_argument("canonical weight has no unit entry to solve for");
}

}  // namespace boxcount

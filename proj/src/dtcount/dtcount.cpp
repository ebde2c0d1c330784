#include "boxcount/dtcount/dtcount.hpp"

#include <algorithm>
#include <sstream>

#include "boxcount/algebra/render.hpp"
#include "boxcount/characters/characters.hpp"
#include "boxcount/errors.hpp"
#include "boxcount/parallel.hpp"

namespace boxcount {

Specialization Specialization::parse(const std::vector<std::string>& directives) {
  Specialization s;
  for (const auto& d : directives) {
    if (d == "cy") {
      s.cy = true;
      continue;
    }
    const auto eq = d.find('=');
    if (eq == std::string::npos || eq < 2 || d[0] != 't') throw ParseError("bad specialization \"" + d + "\"");
    const std::string var = d.substr(1, eq - 1);
    if (var != "1" && var != "2" && var != "3") throw ParseError("unknown variable in \"" + d + "\"");
    Rational value;
    if (value.set_str(d.substr(eq + 1), 10) != 0) throw ParseError("bad rational in \"" + d + "\"");
    value.canonicalize();
    if (value == 0) throw ParseError("torus variables cannot be zero");
    s.values.emplace_back(static_cast<std::size_t>(var[0] - '1'), value);
  }
  return s;
}

RationalFunction vertex_term(const LeggedPartition3D& pi, const std::optional<Substitution>& character_map) {
  LaurentPolynomial chi = vertex_char(pi);
  if (character_map) chi = character_map->apply(chi);
  try {
    return ahat(-chi);
  } catch (const DegeneracyError& e) {
    throw DegeneracyError(std::string(e.what()) + " at a solid partition", pi.to_json().dump());
  }
}

BoxSeries vertex_series(const Legs& legs, int zorder, const std::optional<Substitution>& character_map) {
  const int lowest = minimal_regularized_size(legs);
  if (zorder < lowest) return BoxSeries(zorder);
  const auto configs = enumerate_legged(legs, zorder - lowest);
  const auto terms = parallel_map(configs.size(), [&](std::size_t i) { return vertex_term(configs[i], character_map); });
  std::vector<std::vector<RationalFunction>> by_size(static_cast<std::size_t>(zorder - lowest) + 1);
  for (std::size_t i = 0; i < configs.size(); ++i) {
    const int n = configs[i].regularized_size();
    by_size[static_cast<std::size_t>(n - lowest)].push_back(n % 2 == 0 ? terms[i] : -terms[i]);
  }
  const std::size_t arity = character_map ? character_map->target_arity() : kDTArity;
  std::vector<RationalFunction> coeffs;
  for (const auto& group : by_size)
    coeffs.push_back(group.empty() ? RationalFunction::constant(0, arity) : RationalFunction::sum(group));
  return BoxSeries::from_coefficients(lowest, std::move(coeffs), zorder);
}

EdgeWeight edge_weight(const Partition2D& lambda, int m, int mp, int degree,
                       const std::optional<Substitution>& character_map) {
  EdgeWeight w;
  w.z_power = edge_euler_characteristic(lambda, m, mp);
  w.q_power = lambda.size() * degree;
  LaurentPolynomial chi = edge_char(lambda, m, mp);
  if (character_map) chi = character_map->apply(chi);
  try {
    w.value = ahat(-chi);
  } catch (const DegeneracyError& e) {
    throw DegeneracyError(std::string(e.what()) + " on an edge", lambda.to_string());
  }
  return w;
}

BoxSeries GradedSeries::coefficient(const std::vector<int>& degree) const {
  const auto it = terms.find(degree);
  return it == terms.end() ? BoxSeries(zorder) : it->second;
}

GradedSeries GradedSeries::collapsed(const std::string& name) const {
  GradedSeries out;
  out.q_names = {name};
  out.variable_names = variable_names;
  out.zorder = zorder;
  for (const auto& [degree, series] : terms) {
    int total = 0;
    for (int d : degree) total += d;
    const auto it = out.terms.find({total});
    if (it == out.terms.end()) {
      out.terms.emplace(std::vector<int>{total}, series);
    } else {
      it->second = it->second + series;
    }
  }
  return out;
}

namespace {

std::string q_monomial(const std::vector<std::string>& names, const std::vector<int>& degree) {
  std::string out;
  for (std::size_t i = 0; i < degree.size(); ++i) {
    if (degree[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[i];
    if (degree[i] != 1) out += "^" + std::to_string(degree[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

nlohmann::json GradedSeries::to_json() const {
  nlohmann::json series = nlohmann::json::object();
  nlohmann::json exact = nlohmann::json::object();
  for (const auto& [degree, s] : terms) {
    nlohmann::json text = nlohmann::json::object();
    for (int n = s.lower(); n <= zorder && !s.is_zero(); ++n) {
      const RationalFunction c = s.coefficient(n);
      if (!c.is_zero()) text[std::to_string(n)] = boxcount::render(c, variable_names);
    }
    const std::string key = q_monomial(q_names, degree);
    series[key] = text;
    exact[key] = boxcount::to_json(s);
  }
  return {{"q_names", q_names}, {"variables", variable_names}, {"zorder", zorder}, {"series", series}, {"exact", exact}};
}

std::string GradedSeries::render() const {
  std::ostringstream out;
  for (const auto& [degree, s] : terms)
    out << q_monomial(q_names, degree) << ": " << boxcount::render(s, variable_names) << "\n";
  return out.str();
}

RationalFunction apply_values(const RationalFunction& r, const Specialization& spec) {
  if (spec.values.empty()) return r;
  Substitution s(r.arity(), r.arity());
  for (const auto& [index, value] : spec.values) s.set_value(index, value);
  return r.specialize(s);
}

namespace {

BoxSeries apply_values(const BoxSeries& s, const Specialization& spec) {
  if (spec.values.empty() || s.is_zero()) return s;
  std::vector<RationalFunction> coeffs;
  for (const auto& c : s.coefficients()) coeffs.push_back(apply_values(c, spec));
  return BoxSeries::from_coefficients(s.lower(), std::move(coeffs), s.order());
}

// Recursive enumeration of leg assignments on the compact edges within the caps.
void assign(const ToricGraph& g, const std::vector<int>& compact, const std::vector<std::string>& names,
            std::vector<int>& budget, std::size_t k, std::vector<Partition2D>& current,
            std::vector<std::vector<Partition2D>>& out) {
  if (k == compact.size()) {
    out.push_back(current);
    return;
  }
  const ToricEdge& e = g.edges[static_cast<std::size_t>(compact[k])];
  const auto slot = static_cast<std::size_t>(std::find(names.begin(), names.end(), e.q) - names.begin());
  const int max_size = budget[slot] / e.degree;
  for (const auto& lambda : enumerate_partitions_up_to(max_size)) {
    budget[slot] -= lambda.size() * e.degree;
    current.push_back(lambda);
    assign(g, compact, names, budget, k + 1, current, out);
    current.pop_back();
    budget[slot] += lambda.size() * e.degree;
  }
}

}  // namespace

GradedSeries z_partition_function(const ToricGraph& g, const std::map<std::string, int>& qcaps, int zorder,
                                  const Specialization& spec) {
  GradedSeries out;
  out.q_names = g.q_names();
  out.variable_names = default_names(kDTArity);
  out.zorder = zorder;

  std::optional<Substitution> slice;
  if (spec.cy) slice = canonical_slice(g.canonical_weight(0));
  auto framed = [&](const Substitution& frame) { return slice ? slice->after(frame) : frame; };

  std::vector<int> compact;
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    if (g.edges[i].compact()) compact.push_back(static_cast<int>(i));
  std::vector<int> budget;
  for (const auto& name : out.q_names) {
    const auto it = qcaps.find(name);
    budget.push_back(it == qcaps.end() ? 0 : it->second);
  }
  std::vector<std::vector<Partition2D>> assignments;
  std::vector<Partition2D> current;
  assign(g, compact, out.q_names, budget, 0, current, assignments);

  const std::size_t nv = g.vertices.size();
  std::vector<Substitution> vertex_maps, edge_maps;
  for (std::size_t v = 0; v < nv; ++v) vertex_maps.push_back(framed(g.vertex_frame(static_cast<int>(v))));
  for (int e : compact) edge_maps.push_back(framed(g.edge_frame(g.edges[static_cast<std::size_t>(e)])));

  struct Plan {
    std::vector<Legs> legs;
    std::vector<int> needed;
    std::vector<int> degree;
    int chi = 0;
  };
  std::vector<Plan> plans;
  std::map<std::pair<std::size_t, Legs>, int> wanted;
  for (const auto& lambdas : assignments) {
    Plan p;
    p.legs.assign(nv, Legs{});
    p.degree.assign(out.q_names.size(), 0);
    for (const auto& e : g.edges)
      if (!e.compact()) p.legs[static_cast<std::size_t>(e.v0)][static_cast<std::size_t>(e.slot0)] = e.boundary;
    for (std::size_t k = 0; k < compact.size(); ++k) {
      const ToricEdge& e = g.edges[static_cast<std::size_t>(compact[k])];
      const Partition2D& lambda = lambdas[k];
      p.legs[static_cast<std::size_t>(e.v0)][static_cast<std::size_t>(e.slot0)] = lambda;
      p.legs[static_cast<std::size_t>(*e.v1)][static_cast<std::size_t>(e.slot1)] = e.transposed ? lambda.conjugate() : lambda;
      p.chi += edge_euler_characteristic(lambda, e.m, e.mp);
      const auto slot = static_cast<std::size_t>(std::find(out.q_names.begin(), out.q_names.end(), e.q) - out.q_names.begin());
      p.degree[slot] += lambda.size() * e.degree;
    }
    std::vector<int> lowest(nv);
    int bound = p.chi;
    for (std::size_t v = 0; v < nv; ++v) bound += lowest[v] = minimal_regularized_size(p.legs[v]);
    if (bound > zorder) continue;
    for (std::size_t v = 0; v < nv; ++v) {
      p.needed.push_back(zorder - (bound - lowest[v]));
      int& w = wanted.try_emplace({v, p.legs[v]}, p.needed.back()).first->second;
      w = std::max(w, p.needed.back());
    }
    plans.push_back(std::move(p));
  }

  std::map<std::pair<std::size_t, Legs>, BoxSeries> vertices;
  for (const auto& [key, order] : wanted)
    vertices.emplace(key, vertex_series(key.second, order, vertex_maps[key.first]));

  std::map<std::pair<std::size_t, Partition2D>, EdgeWeight> edge_cache;
  auto edge_value = [&](std::size_t k, const Partition2D& lambda) -> const EdgeWeight& {
    const auto it = edge_cache.find({k, lambda});
    if (it != edge_cache.end()) return it->second;
    const ToricEdge& e = g.edges[static_cast<std::size_t>(compact[k])];
    return edge_cache.emplace(std::make_pair(k, lambda), edge_weight(lambda, e.m, e.mp, e.degree, edge_maps[k])).first->second;
  };
  std::vector<RationalFunction> edge_products;
  for (const auto& p : plans) {
    RationalFunction c = RationalFunction::constant(p.chi % 2 == 0 ? 1 : -1, kDTArity);
    for (std::size_t k = 0; k < compact.size(); ++k) {
      const ToricEdge& e = g.edges[static_cast<std::size_t>(compact[k])];
      c *= edge_value(k, p.legs[static_cast<std::size_t>(e.v0)][static_cast<std::size_t>(e.slot0)]).value;
    }
    edge_products.push_back(std::move(c));
  }

  const auto products = parallel_map(plans.size(), [&](std::size_t i) {
    const Plan& p = plans[i];
    BoxSeries s = vertices.at({0, p.legs[0]}).truncated(p.needed[0]);
    for (std::size_t v = 1; v < nv; ++v) s = s * vertices.at({v, p.legs[v]}).truncated(p.needed[v]);
    return s.truncated(std::min(s.order(), zorder - p.chi)).shifted(p.chi).scaled(edge_products[i]);
  });

  for (std::size_t i = 0; i < plans.size(); ++i) {
    const BoxSeries term = products[i].truncated(zorder);
    const auto it = out.terms.find(plans[i].degree);
    if (it == out.terms.end()) {
      out.terms.emplace(plans[i].degree, term);
    } else {
      it->second = it->second + term;
    }
  }
  for (auto& [degree, s] : out.terms) s = apply_values(s, spec);
  return out;
}

BoxSeries degree0_series(int zorder, const std::optional<Substitution>& character_map) {
  return vertex_series(Legs{}, zorder, character_map);
}

CohomologicalSeries cohomological_degree0(int zorder) {
  std::vector<FactoredRational> coeffs;
  for (int n = 0; n <= zorder; ++n) {
    const auto pis = enumerate_plane_partitions(n);
    const auto terms = parallel_map(pis.size(), [&](std::size_t i) { return euler_cohomological(tvir_3d(pis[i])); });
    FactoredRational total = FactoredRational::constant(0, kDTArity);
    for (const auto& t : terms) total += t;
    coeffs.push_back(n % 2 == 0 ? total : -total);
  }
  return CohomologicalSeries::from_coefficients(0, std::move(coeffs), zorder);
}

GradedSeries dtpt_divide(const GradedSeries& full, int zorder) {
  GradedSeries out = full;
  out.zorder = zorder;
  const BoxSeries base = full.coefficient(std::vector<int>(full.q_names.size(), 0)).truncated(zorder);
  const BoxSeries inv = base.inverse();
  for (auto& [degree, s] : out.terms) s = (s.truncated(zorder) * inv).truncated(zorder);
  return out;
}

}  // namespace boxcount

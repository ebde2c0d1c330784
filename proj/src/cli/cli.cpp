#include "boxcount/cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "boxcount/algebra/render.hpp"
#include "boxcount/characters/characters.hpp"
#include "boxcount/dtcount/dtcount.hpp"
#include "boxcount/errors.hpp"
#include "boxcount/nekrasov/nekrasov.hpp"
#include "boxcount/parallel.hpp"
#include "boxcount/verify/verify.hpp"

namespace boxcount {

namespace {

struct RunConfig {
  std::string format = "text";
  int jobs = 0;
  std::uint64_t seed = 1;
  std::string out;
  std::vector<std::string> spec;
  int zorder = -1;
  int delta = -1;
  std::vector<std::string> qorder;
  // vertex
  std::string legs;
  // z
  std::string geometry;
  std::string builtin;
  int m = 0, mp = 0, n = 0;
  bool dtpt = false;
  // verify
  std::string suite;
  int order = -1;
  std::string mode = "exact";
  bool canary = false;
  // nekrasov
  std::string gauge;
  bool unsymmetrized = false;
};

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

BoxSeries reduced(const BoxSeries& s) {
  if (s.is_zero()) return s;
  std::vector<RationalFunction> c;
  for (const auto& x : s.coefficients()) c.push_back(x.reduced());
  return BoxSeries::from_coefficients(s.lower(), std::move(c), s.order());
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

std::string series_csv(const BoxSeries& s, const std::vector<std::string>& names, const std::string& prefix) {
  std::ostringstream out;
  for (int n = s.valuation(); n <= s.order(); ++n) {
    const RationalFunction c = s.coefficient(n);
    if (!c.is_zero()) out << prefix << n << "," << csv_quote(render(c, names)) << "\n";
  }
  return out.str();
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParseError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

int cmd_vertex(const RunConfig& c, std::ostream& out) {
  const Legs legs = parse_legs(c.legs);
  const Specialization spec = Specialization::parse(c.spec);
  const int lowest = minimal_regularized_size(legs);
  const int zorder = c.zorder >= 0 ? c.zorder : lowest + c.delta;
  if (zorder < lowest) throw ParseError("zorder below the minimal size " + std::to_string(lowest) + " of these legs");
  std::optional<Substitution> map;
  if (spec.cy) map = calabi_yau_slice();
  BoxSeries s = vertex_series(legs, zorder, map);
  if (!spec.values.empty()) {
    std::vector<RationalFunction> coeffs;
    for (const auto& x : s.coefficients()) coeffs.push_back(apply_values(x, spec));
    s = BoxSeries::from_coefficients(s.lower(), std::move(coeffs), s.order());
  }
  s = reduced(s);
  const auto names = default_names(kDTArity);
  Output o(c.out, out);
  if (c.format == "json") {
    nlohmann::json text = nlohmann::json::object();
    for (int n = s.valuation(); n <= zorder; ++n)
      if (!s.coefficient(n).is_zero()) text[std::to_string(n)] = render(s.coefficient(n), names);
    o.stream() << nlohmann::json{{"legs", legs_to_string(legs)}, {"zorder", zorder}, {"minimal_size", lowest},
                                 {"variables", names}, {"coefficients", text}, {"series", boxcount::to_json(s)}}
                      .dump()
               << "\n";
  } else if (c.format == "csv") {
    o.stream() << "z_power,coefficient\n" << series_csv(s, names, "");
  } else {
    o.stream() << render(s, names) << "\n";
  }
  return kExitOk;
}

std::map<std::string, int> parse_qcaps(const std::vector<std::string>& items, const std::vector<std::string>& names) {
  std::map<std::string, int> caps;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    try {
      if (eq == std::string::npos) {
        const int cap = std::stoi(item);
        for (const auto& name : names) caps[name] = cap;
      } else {
        caps[item.substr(0, eq)] = std::stoi(item.substr(eq + 1));
      }
    } catch (const std::logic_error&) {
      throw ParseError("bad --qorder value \"" + item + "\"");
    }
  }
  for (const auto& [name, cap] : caps) {
    if (cap < 0) throw ParseError("degree caps must be non-negative");
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw ParseError("geometry has no degree variable " + name);
  }
  return caps;
}

int cmd_z(const RunConfig& c, std::ostream& out) {
  ToricGraph g;
  if (!c.geometry.empty()) {
    g = ToricGraph::from_json(read_json_file(c.geometry));
  } else if (!c.builtin.empty()) {
    nlohmann::json j{{"builtin", c.builtin}, {"m", c.m}, {"mp", c.mp}, {"n", c.n}};
    g = ToricGraph::from_json(j);
  } else {
    throw ParseError("z needs --geometry or --builtin");
  }
  if (c.zorder < 0) throw ParseError("z needs --zorder");
  const Specialization spec = Specialization::parse(c.spec);
  const auto caps = parse_qcaps(c.qorder, g.q_names());
  GradedSeries z = z_partition_function(g, caps, c.zorder, spec);
  if (c.dtpt) z = dtpt_divide(z, c.zorder);
  for (auto& [degree, s] : z.terms) s = reduced(s);
  Output o(c.out, out);
  if (c.format == "json") {
    nlohmann::json j = z.to_json();
    j["geometry"] = g.to_json();
    o.stream() << j.dump() << "\n";
  } else if (c.format == "csv") {
    o.stream() << "q_monomial,z_power,coefficient\n";
    for (const auto& [degree, s] : z.terms) {
      std::string mono;
      for (std::size_t i = 0; i < degree.size(); ++i)
        if (degree[i] != 0) mono += (mono.empty() ? "" : "*") + z.q_names[i] + (degree[i] == 1 ? "" : "^" + std::to_string(degree[i]));
      o.stream() << series_csv(s, z.variable_names, csv_quote(mono.empty() ? "1" : mono) + ",");
    }
  } else {
    o.stream() << z.render();
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  if (c.order < 0) throw ParseError("verify needs --order");
  if (c.canary && (c.suite == "hilbC3" || c.suite == "cy-vertex")) throw ParseError("suite " + c.suite + " has no canary");
  Report r;
  if (c.suite == "mcmahon") {
    r = c.canary ? check_mcmahon(c.order, std::min(c.order, 3)) : check_mcmahon(c.order);
  } else if (c.suite == "nekrasov-degree0") {
    NekrasovCheck options;
    if (c.mode == "random" || c.mode == "random-eval") {
      options.mode = EvalMode::random;
    } else if (c.mode != "exact") {
      throw ParseError("unknown mode " + c.mode);
    }
    options.seed = c.seed;
    options.flip_kappa = c.canary;
    r = check_nekrasov_degree0(c.order, options);
  } else if (c.suite == "hilbC3") {
    r = check_hilbC3(c.order);
  } else if (c.suite == "ext1") {
    r = check_ext1_forms(c.order, c.canary);
  } else if (c.suite == "cy-vertex") {
    r = check_cy_vertex(c.order);
  } else {
    throw ParseError("unknown suite \"" + c.suite + "\"");
  }
  const std::string report = r.to_json().dump();
  if (!c.out.empty()) {
    Output o(c.out, out);
    o.stream() << report << "\n";
  }
  if (c.format == "json" || c.out.empty()) {
    out << report << "\n";
  } else {
    out << r.check << " order " << r.order << ": " << (r.pass ? "pass" : "fail") << "\n";
  }
  return r.pass ? kExitOk : kExitCheckFailed;
}

int cmd_nekrasov(const RunConfig& c, std::ostream& out) {
  GaugeSpec g = GaugeSpec::from_json(read_json_file(c.gauge));
  const int order = c.order >= 0 ? c.order : g.order;
  if (order < 0) throw ParseError("nekrasov needs an order");
  const NekrasovSeries s = z_nekrasov(g, order, !c.unsymmetrized);
  Output o(c.out, out);
  if (c.format == "json") {
    o.stream() << s.to_json().dump() << "\n";
  } else if (c.format == "csv") {
    o.stream() << "degree,coefficient\n";
    for (const auto& [degree, value] : s.coefficients) {
      if (value.is_zero()) continue;
      std::string d;
      for (int x : degree) d += (d.empty() ? "" : " ") + std::to_string(x);
      o.stream() << csv_quote(d) << "," << csv_quote(render(value, s.variable_names)) << "\n";
    }
  } else {
    o.stream() << s.render() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant box counting: DT vertex sums, Nekrasov partition functions, checks", "boxcount"};
  app.require_subcommand(1);
  RunConfig c;
  app.add_option("--format", c.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", c.jobs, "worker threads (default BOXCOUNT_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "seed for random evaluation");
  app.add_option("--out", c.out, "write the result to this file");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format)->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--jobs", c.jobs)->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed);
    sub->add_option("--out", c.out);
  };

  CLI::App* vertex = app.add_subcommand("vertex", "vertex series for legs \"l;m;n\"");
  vertex->add_option("--legs", c.legs, "legs, e.g. \"2,1;;1\"")->required();
  vertex->add_option("--zorder", c.zorder, "last z power");
  vertex->add_option("--delta", c.delta, "deviation budget above the minimal size");
  vertex->add_option("--spec", c.spec, "cy or t<i>=<rational square>; repeatable")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  add_common(vertex);

  CLI::App* z = app.add_subcommand("z", "partition function of a toric graph");
  z->add_option("--geometry", c.geometry, "geometry JSON file");
  z->add_option("--builtin", c.builtin, "C3, P3, P1cubed, local_curve, conifold, Xn");
  z->add_option("--m", c.m, "first normal degree of local_curve");
  z->add_option("--mp", c.mp, "second normal degree of local_curve");
  z->add_option("--n", c.n, "number of vertices of Xn");
  z->add_option("--zorder", c.zorder, "last z power")->required();
  z->add_option("--qorder", c.qorder, "cap for every degree variable, or NAME=cap; repeatable")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  z->add_option("--spec", c.spec, "cy or t<i>=<rational square>; repeatable")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  z->add_flag("--dtpt", c.dtpt, "divide by the degree-0 part");
  add_common(z);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", c.suite, "mcmahon, nekrasov-degree0, hilbC3, ext1, cy-vertex")->required();
  verify->add_option("--order", c.order, "order (maximal partition size for ext1)")->required();
  verify->add_option("--mode", c.mode, "exact or random");
  verify->add_flag("--canary", c.canary, "run the deliberately broken variant (mcmahon, nekrasov-degree0, ext1)");
  add_common(verify);

  CLI::App* nekrasov = app.add_subcommand("nekrasov", "instanton partition function of a quiver gauge theory");
  nekrasov->add_option("--gauge", c.gauge, "gauge spec JSON file")->required();
  nekrasov->add_option("--order", c.order, "total instanton number cap (default: the file's \"order\")");
  nekrasov->add_flag("--unsymmetrized", c.unsymmetrized, "use the (1 - w^-1) weights");
  add_common(nekrasov);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const int saved_jobs = worker_count();
  if (c.jobs > 0) set_worker_count(c.jobs);
  auto restore = [&] { set_worker_count(saved_jobs); };
  try {
    int code = kExitUsage;
    if (vertex->parsed()) {
      if (c.zorder < 0 && c.delta < 0) throw ParseError("vertex needs --zorder or --delta");
      code = cmd_vertex(c, out);
    } else if (z->parsed()) {
      code = cmd_z(c, out);
    } else if (verify->parsed()) {
      code = cmd_verify(c, out);
    } else if (nekrasov->parsed()) {
      code = cmd_nekrasov(c, out);
    }
    restore();
    return code;
  } catch (const DegeneracyError& e) {
    restore();
    err << "degenerate: " << e.what() << "\n" << nlohmann::json{{"witness", e.witness()}}.dump() << "\n";
    return kExitDegenerate;
  } catch (const InternalConsistencyError& e) {
    restore();
    err << "internal consistency failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::invalid_argument& e) {
    restore();
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    restore();
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace boxcount

// Runs the acceptance criteria in order and prints one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "boxcount/algebra/render.hpp"
#include "boxcount/characters/characters.hpp"
#include "boxcount/dtcount/dtcount.hpp"
#include "boxcount/parallel.hpp"
#include "boxcount/partitions/partition3d.hpp"
#include "boxcount/verify/verify.hpp"

using namespace boxcount;

namespace {

struct Outcome {
  bool pass = false;
  std::string note;
  // Canonical text of the computed results, compared across worker counts.
  std::string output;
};

Outcome fail(std::string note) { return {false, std::move(note), {}}; }

Outcome report_outcome(const Report& r) {
  return {r.pass, r.pass ? std::string() : r.witness.dump(), r.to_json().dump()};
}

Outcome criterion_mcmahon_counts() {
  const Report r = check_mcmahon(8);
  if (!r.pass) return report_outcome(r);
  const nlohmann::json expected = {1, 1, 3, 6, 13, 24, 48, 86, 160};
  if (r.details.at("counts") != expected) return fail("counts " + r.details.at("counts").dump());
  return report_outcome(r);
}

Outcome criterion_ext1_forms() { return report_outcome(check_ext1_forms(6)); }

Outcome criterion_nekrasov_degree0() {
  const Report exact = check_nekrasov_degree0(4);
  if (!exact.pass) return fail("exact: " + exact.witness.dump());
  NekrasovCheck sampled;
  sampled.mode = EvalMode::random;
  sampled.points = 20;
  sampled.seed = 20;
  const Report random = check_nekrasov_degree0(6, sampled);
  if (!random.pass) return fail("random: " + random.witness.dump());
  return {true, "exact through z^4, 20 points through z^6", exact.to_json().dump() + random.to_json().dump()};
}

Outcome criterion_cohomological_degree0() {
  const Report r = check_hilbC3(4);
  if (!r.pass) return report_outcome(r);
  const nlohmann::json mc = {"1", "1", "3", "6", "13"};
  if (r.details.at("c1_zero") != mc) return fail("c1 = 0 slice " + r.details.at("c1_zero").dump());
  return report_outcome(r);
}

Outcome criterion_cy_vertex() {
  const Report r = check_cy_vertex(6);
  if (!r.pass) return report_outcome(r);
  const auto& legs = r.details.at("leg_coefficients");
  if (legs.at("1;;") != nlohmann::json({"1", "2", "5", "11", "24"})) return fail("leg (1): " + legs.at("1;;").dump());
  if (legs.at("2,1;;") != nlohmann::json({"1", "3", "8", "20", "46"}))
    return fail("leg (2,1): " + legs.at("2,1;;").dump());
  return report_outcome(r);
}

Outcome criterion_edge_characters() {
  const Partition2D one({1});
  LaurentPolynomial t2t3(kDTArity);
  t2t3 += LaurentPolynomial::monomial(ExponentVector::unit(kDTArity, 1));
  t2t3 += LaurentPolynomial::monomial(ExponentVector::unit(kDTArity, 2));
  if (edge_char(one, 0, 0) != t2t3) return fail("edge_char((1),0,0) = " + render(edge_char(one, 0, 0)));
  if (!edge_char(one, -1, -1).is_zero()) return fail("edge_char((1),-1,-1) = " + render(edge_char(one, -1, -1)));
  int checked = 0;
  for (const auto& lambda : enumerate_partitions_up_to(4)) {
    for (const auto& [m, mp] : std::vector<std::pair<int, int>>{{0, 0}, {-1, -1}, {-2, 0}, {1, 1}}) {
      const auto e = edge_char(lambda, m, mp);
      if (!e.is_integral()) return fail("non-integral character for " + lambda.to_string());
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " finite characters", {}};
}

Outcome criterion_vertex_characters() {
  std::vector<Partition2D> small;
  for (const auto& p : enumerate_partitions_up_to(2)) small.push_back(p);
  int checked = 0;
  for (const auto& a : small)
    for (const auto& b : small)
      for (const auto& c : small)
        for (const auto& pi : enumerate_legged({a, b, c}, 3)) {
          const auto exact = vertex_char(pi);
          if (vertex_char_truncated(pi, vertex_truncation_size(pi)) != exact)
            return fail("truncation disagrees for " + pi.to_json().dump());
          if (exact.constant_term() != 0) return fail("constant term for " + pi.to_json().dump());
          ++checked;
        }
  return {true, std::to_string(checked) + " configurations", {}};
}

Outcome criterion_conifold_rationality() {
  Specialization cy;
  cy.cy = true;
  const int order = 6;
  const auto z = z_partition_function(ToricGraph::builtin("conifold"), {{"Q", 1}}, order, cy);
  const auto q1 = dtpt_divide(z, order).coefficient({1});
  const auto fit = search_rational_fit(q1, 3);
  if (!fit) return fail("no rational fit for the Q^1 coefficient");
  const Report parity = parity_check(*fit, 0);
  if (!parity.pass) return fail("parity: " + parity.witness.dump());
  if (search_rational_fit(z.coefficient({0}), 3)) return fail("degree-0 series admitted a rational fit");
  return {true, fit->render(), z.to_json().dump() + fit->to_json().dump() + parity.to_json().dump()};
}

struct Criterion {
  int number;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

struct Timed {
  Outcome outcome;
  double seconds;
};

Timed timed(const std::function<Outcome()>& run) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = fail(std::string("exception: ") + e.what());
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return {std::move(o), elapsed.count()};
}

bool print(int number, const char* name, const Outcome& o, double seconds, double limit) {
  const bool pass = o.pass && seconds < limit;
  std::string note = o.note;
  if (o.pass && !pass) note = "over the time limit";
  std::printf("criterion %d %-34s %s  %8.2f s / %.0f s%s%s\n", number, name, pass ? "PASS" : "FAIL", seconds, limit,
              note.empty() ? "" : "  ", note.c_str());
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main() {
  set_worker_count(1);
  const std::vector<Criterion> criteria{
      {1, "McMahon consistency", 10, criterion_mcmahon_counts},
      {2, "Ext1 forms", 30, criterion_ext1_forms},
      {3, "Nekrasov degree-0 formula", 300, criterion_nekrasov_degree0},
      {4, "cohomological degree 0", 120, criterion_cohomological_degree0},
      {5, "Calabi-Yau vertex", 120, criterion_cy_vertex},
      {6, "edge characters", 60, criterion_edge_characters},
      {7, "vertex characters", 120, criterion_vertex_characters},
      {8, "conifold rationality and parity", 120, criterion_conifold_rationality},
  };
  bool all = true;
  std::vector<std::string> serial_output(criteria.size() + 1);
  for (const auto& c : criteria) {
    const Timed t = timed(c.run);
    all = print(c.number, c.name, t.outcome, t.seconds, c.limit_seconds) && all;
    serial_output[static_cast<std::size_t>(c.number)] = t.outcome.output;
  }

  const Timed det = timed([&] {
    set_worker_count(8);
    for (int n : {3, 8}) {
      const Outcome again = criteria[static_cast<std::size_t>(n - 1)].run();
      if (!again.pass || again.output != serial_output[static_cast<std::size_t>(n)] ||
          serial_output[static_cast<std::size_t>(n)].empty())
        return fail("criterion " + std::to_string(n) + " differs with 8 workers");
    }
    return Outcome{true, {}, {}};
  });
  all = print(9, "determinism across worker counts", det.outcome, det.seconds, 600) && all;
  return all ? 0 : 1;
}

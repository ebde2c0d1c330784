#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "boxcount/algebra/ratfun.hpp"
#include "boxcount/algebra/series.hpp"

namespace boxcount {

// {"check", "order", "status", "witness", "seed"}; the witness is null on
// success and names the first failing coefficient otherwise.
struct Report {
  std::string check;
  int order = 0;
  bool pass = false;
  nlohmann::json witness;
  std::optional<std::uint64_t> seed;
  nlohmann::json details;

  nlohmann::json to_json() const;
};

// prod_n (1 - z^n)^-n through z^order.
ScalarSeries mcmahon_series(int order);

// Plane partition counts against the product; `corrupt_at` adds one to
// the count at that order.
Report check_mcmahon(int order, std::optional<int> corrupt_at = {});

enum class EvalMode { exact, random };

struct NekrasovCheck {
  EvalMode mode = EvalMode::exact;
  std::uint64_t seed = 1;
  int points = 20;
  // Replaces kappa by -kappa on the right side.
  bool flip_kappa = false;
};

// Right side of the degree-0 formula as an exact series: the plethystic
// exponential of -A sum_n [n]_kappa z^n, where A is the ratio of the a-hat
// factors of the pairwise products over those of t1, t2, t3.
BoxSeries nekrasov_rhs(int order, bool flip_kappa = false);

Report check_nekrasov_degree0(int order, const NekrasovCheck& options = {});

// Cohomological degree-0 series against Mc(z)^E, and the c1 = 0 slice.
Report check_hilbC3(int order);

Report check_ext1_forms(int max_size, bool transposed_canary = false);

// Degree-0 vertex on the Calabi-Yau slice against Mc(z), and integrality of
// the one-leg vertices (1) and (2,1) on the slice.
Report check_cy_vertex(int order);

// prod_k (1 - (s z)^k)^{a_k} with s = -1 when alternating; exponents[k-1] = a_k.
struct DenominatorShape {
  std::vector<int> exponents;
  bool alternating = false;

  int degree() const;
  ScalarSeries polynomial(int order) const;
  nlohmann::json to_json() const;
};

// numerator(z) / denominator(z); the numerator starts at z^lower.
struct RationalFit {
  DenominatorShape shape;
  int lower = 0;
  std::vector<RationalFunction> numerator;
  std::vector<int> held_out;

  int numerator_degree() const { return lower + static_cast<int>(numerator.size()) - 1; }
  BoxSeries expand(int order) const;
  nlohmann::json to_json() const;
  std::string render() const;
};

BoxSeries as_box_series(const ScalarSeries& s);

// Fits s with the given denominator and numerator exponents at most
// `numerator_degree`. Throws InsufficientDataError unless the order leaves
// two coefficients beyond those that determine the fit.
std::optional<RationalFit> rational_fit(const BoxSeries& s, const DenominatorShape& shape, int numerator_degree);

// Tries shapes of increasing degree up to max_degree, each with every
// admissible numerator degree. Throws InsufficientDataError if no shape is
// admissible at this order.
std::optional<RationalFit> search_rational_fit(const BoxSeries& s, int max_degree, bool alternating = false);

// r(1/z) = (-1)^virdim z^-virdim r(z), i.e. z^(-virdim/2) r is even or odd
// under z -> 1/z.
Report parity_check(const RationalFit& r, int virdim);

// Over the common denominator D(z): the numerator of r(1/z) minus that of
// (-1)^virdim z^-virdim r(z), as coefficients from the returned exponent.
std::pair<int, std::vector<RationalFunction>> parity_residual(const RationalFit& r, int virdim);

}  // namespace boxcount

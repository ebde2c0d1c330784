#pragma once

#include "boxcount/algebra/factored.hpp"
#include "boxcount/algebra/ratfun.hpp"
#include "boxcount/partitions/partition2d.hpp"
#include "boxcount/partitions/partition3d.hpp"

namespace boxcount {

// Two-dimensional characters live on slots (0, 1) = (t1, t2) of a lattice
// of the given arity; three-dimensional ones on the DT torus (t1, t2, t3).
inline constexpr std::size_t kDTArity = 3;

// Sum over boxes (row r, column c) of t1^-(c-1) t2^-(r-1).
LaurentPolynomial char_2d(const Partition2D& lambda, std::size_t arity = 2);

enum class Ext1Form { closed, arms_legs };

// Character of Ext^1(I_lambda, I_mu); |lambda| + |mu| monomials.
LaurentPolynomial ext1_char(const Partition2D& lambda, const Partition2D& mu, Ext1Form form,
                            std::size_t arity = 2);

// Arm/leg form with the roles of arm and leg exchanged. Only a canary for
// the verification harness; not equal to ext1_char in general.
LaurentPolynomial ext1_char_transposed(const Partition2D& lambda, const Partition2D& mu,
                                       std::size_t arity = 2);

// G - t1 t2 t3 Gbar - (1-t1)(1-t2)(1-t3) G Gbar.
RationalFunction tangent_functional(const RationalFunction& g);
LaurentPolynomial tangent_functional(const LaurentPolynomial& g);

// Sum over boxes (a, b, c) of t1^-a t2^-b t3^-c.
LaurentPolynomial char_3d(const std::vector<Box>& boxes);

LaurentPolynomial tvir_3d(const Partition3D& pi);

// Character of the leg cylinder along `axis` alone.
RationalFunction cylinder_char(const Partition2D& leg, int axis);

// Inclusion-exclusion of the leg cylinders plus the deviation.
RationalFunction legged_char(const LeggedPartition3D& pi);

// F(legged_char) minus F of each leg cylinder, reduced. Throws
// InternalConsistencyError if the reduction leaves a denominator.
LaurentPolynomial vertex_char(const LeggedPartition3D& pi);

// The same character from the finite truncation to [0,N)^3, keeping
// exponents of sup-norm at most N/2.
LaurentPolynomial vertex_char_truncated(const LeggedPartition3D& pi, int n);
// A truncation size comfortably beyond boundary effects.
int vertex_truncation_size(const LeggedPartition3D& pi);

// t1 -> t1^-1, t2 -> t2 t1^-m, t3 -> t3 t1^-m'.
Substitution edge_chart_transition(int m, int mp);

// Tangent character of the thickened edge curve with cross-section lambda
// (columns along t2, rows along t3) and normal degrees (m, m').
LaurentPolynomial edge_char(const Partition2D& lambda, int m, int mp);

// Holomorphic Euler characteristic of the thickened edge curve:
// sum over boxes (r, c) of 1 - m (c-1) - m' (r-1).
int edge_euler_characteristic(const Partition2D& lambda, int m, int mp);

// prod over weights w (multiplicity k) of (w^(1/2) - w^(-1/2))^k. Weights
// must be integral. A trivial weight with k > 0 gives 0; k < 0 throws
// DegeneracyError.
RationalFunction ahat(const LaurentPolynomial& character);

// prod over weights t^a (multiplicity k) of <a, s>^-k, in variables s_i.
// A zero linear form (including the constant term) throws DegeneracyError.
FactoredRational euler_cohomological(const LaurentPolynomial& character);

// Restriction to t1 t2 t3 = 1 on the character, via t3 -> (t1 t2)^-1.
LaurentPolynomial cy_restrict(const LaurentPolynomial& character);

// Number of monomials counted with |multiplicity|, and the rank.
long monomial_count(const LaurentPolynomial& character);
Rational rank(const LaurentPolynomial& character);

}  // namespace boxcount

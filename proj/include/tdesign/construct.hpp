#pragma once

#include <span>
#include <vector>

#include "tdesign/design.hpp"
#include "tdesign/interval_design.hpp"

namespace tdesign {

/// The star lift (y, c) -> (sqrt(1-c^2) y_1, ..., sqrt(1-c^2) y_{n-1}, c ||y||);
/// norm preserving.
std::vector<double> star_lift_point(std::span<const double> y, double c);

/// One lifting step R^{n-1} -> R^n: the interval design it consumes is built
/// for the target dimension's weight exponent (n-3)/2 at strength t.
struct LiftPlan {
    int source_dim = 0;
    int target_dim = 0;
    int t = 0;
    IntervalDesign interval;
};

LiftPlan make_lift_plan(int target_dim, int t);

/// Lift a Euclidean t-design in R^{n-1} to R^n by combining it with the
/// interval t-design for mu(x) = (1-x^2)^{(n-3)/2}: points y * c with weights
/// w(y) gamma(c).  Preserves the norm spectrum and every layer mass.  In
/// debug builds the source is verified first.
WeightedPointSet lift_design(const WeightedPointSet& src, const LiftPlan& plan);
WeightedPointSet lift_design(const WeightedPointSet& src, int t);

/// Iterate lift_design from a planar design up to the target dimension.
WeightedPointSet lift_to_dimension(const WeightedPointSet& planar, int target_dim, int t);

/// Union of p concentric regular m-gons (m = t+3-2p), the k-th rotated by
/// k pi / m, with weights
///   w(b_{k,j}) = r_1^{-m}                                       for k = 1,
///   w(b_{k,j}) = (-1)^k r_k^{-m} prod_{l != k} (r_1^2-r_l^2)/(r_k^2-r_l^2)
/// for k >= 2; a tight Euclidean t-design in the plane.  Radii are sorted
/// ascending internally (the smallest carries the r_1^{-m} weight).
WeightedPointSet tight_polygon_design(int t, std::vector<double> radii);

/// The lattice shell I^n_k: all vectors in {-1,0,1}^n with exactly k nonzero
/// entries (2^k binom(n,k) of them), in deterministic order.
std::vector<std::vector<int>> lattice_shell(int n, int k);

enum class FGCaseTag { d3t5, d3t7, d4t7 };

/// A lattice-shell design instance: scaled shells r(k)/sqrt(k) * I^n_k with
/// per-shell constant weights.
struct FGCase {
    FGCaseTag tag = FGCaseTag::d3t5;
    double lambda = 0.0;
    int dim = 0;
    int t = 0;
    std::vector<int> shells;          // k in J
    std::vector<double> radii;        // layer radius r(k)
    std::vector<double> shell_weights;
};

/// Fill the case table for the given shape parameter (lambda > 0, lambda != 1):
///   d3t5: shells {1,3},   r = (1, lambda),                        w = (1, 9/(8 lambda^4))
///   d3t7: shells {1,2,3}, r = (1, sqrt((2l+3)/(5l)), sqrt((2l+3)/5)),
///                         w = (1, 100 l^3/(2l+3)^3, 675/(8 (2l+3)^3))
///   d4t7: shells {1,2,4}, r = (1, lambda, 1),                     w = (1, 1/lambda^6, 1)
FGCase make_fg_case(FGCaseTag tag, double lambda);

/// Exact-rational view of the same table (radii as squared radii, which are
/// rational whenever lambda is).
struct FGExactTable {
    std::vector<int> shells;
    std::vector<Rational> radius_sq;
    std::vector<Rational> weights;
};

FGExactTable fg_case_table(FGCaseTag tag, const Rational& lambda);

/// Materialize the weighted point set of an FG case.
WeightedPointSet fg_design(const FGCase& fg);

}  // namespace tdesign

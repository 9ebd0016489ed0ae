#pragma once

#include <vector>

#include "tdesign/orthopoly.hpp"

namespace tdesign {

/// Interval t-design on [-1,1] for the weight mu(x) = (1-x^2)^{(n-3)/2}:
/// interior antipodal nodes with positive weights summing to 1.
struct IntervalDesign {
    int n = 0;
    int t = 0;
    std::vector<double> nodes;    // sorted, antipodal, in (-1,1)
    std::vector<double> weights;  // normalized Christoffel numbers
};

/// Gauss-Jacobi rule with s = floor(t/2)+1 nodes; exact through degree 2s-1.
IntervalDesign build_interval_design(int n, int t);

struct IntervalReport {
    bool pass = false;
    int requested_strength = 0;
    double max_residual = 0.0;
    int first_failed_degree = -1;           // -1 when passing
    std::vector<double> residuals;          // per degree 0..t, scale-relative
};

/// Compare sum_i gamma_i c_i^k against the exact normalized moment for every
/// 0 <= k <= t.  Antipodal node pairs are summed together, so odd moments
/// cancel bit-exactly.
IntervalReport verify_interval_design(const IntervalDesign& d, int t, double tol = 1e-10);

}  // namespace tdesign

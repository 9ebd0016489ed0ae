#pragma once

#include <vector>

#include "tdesign/exact_moments.hpp"

namespace tdesign {

/// Jacobi polynomial P_s^{(alpha,beta)}; the designs only ever use the
/// ultraspherical pair alpha = beta = (n-3)/2, which is exact in binary64.
struct JacobiSpec {
    unsigned degree = 0;
    double alpha = 0.0;
    double beta = 0.0;
};

struct JacobiValue {
    double value = 0.0;
    double derivative = 0.0;
};

/// Evaluate P_s^{(alpha,beta)} and its derivative by the three-term
/// recurrence (derivative via P_{s-1}^{(alpha+1,beta+1)}).  For alpha == beta
/// the recurrence is sign-exact: P_s(-x) == (-1)^s P_s(x) bit for bit.
JacobiValue jacobi_eval(const JacobiSpec& spec, double x);

struct RootSet {
    unsigned degree = 0;
    int dim = 0;                    // n fixing alpha = beta = (n-3)/2
    std::vector<double> roots;      // strictly increasing, interior, antipodal
    std::vector<double> residuals;  // |P_s(root)| after cleanup
};

/// All s roots of the Gegenbauer polynomial P_s^{(n-3)/2}, found by Newton
/// iteration from bracketed sign changes, then snapped to exact antipodal
/// pairs (middle root forced to 0 for odd s).
RootSet gegenbauer_roots(unsigned s, int n);

/// Christoffel numbers for the roots: the Gauss-Jacobi weights
///   gamma(c) = pref / ((1-c^2) P_s'(c)^2),
/// unnormalized, so they sum to mu(I).
std::vector<double> christoffel_weights(unsigned s, int n, const RootSet& roots);

/// The Gamma-factor prefactor of the Christoffel formula,
/// 2^{alpha+beta+1} Gamma(alpha+s+1) Gamma(beta+s+1) / (s! Gamma(alpha+beta+s+1)),
/// kept exact in the rational*sqrt(pi)^k ring.
PiScaled christoffel_prefactor(unsigned s, int n);

/// Exact coefficients of the classical Gegenbauer polynomial C_d^{lambda}:
/// returns a of length d/2+1 with C_d^{lambda}(u) = sum_j a[j] u^{d-2j}.
/// Used by the harmonic basis construction, where lambda is a positive
/// half-integer.
std::vector<Rational> gegenbauer_coefficients(unsigned d, const Rational& lambda);

}  // namespace tdesign

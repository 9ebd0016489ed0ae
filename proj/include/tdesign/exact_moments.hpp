#pragma once

#include <span>

#include "tdesign/rational.hpp"

namespace tdesign {

/// Exact value of the form coeff * sqrt(pi)^sqrt_pi_power.
///
/// Every special-function value this library needs (half-integer gamma,
/// sphere surface areas, the ultraspherical interval mass) lives in this
/// ring, so products and quotients stay exact until the final conversion
/// to double.
struct PiScaled {
    Rational coeff;
    int sqrt_pi_power = 0;

    double value() const;

    friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
        return {a.coeff * b.coeff, a.sqrt_pi_power + b.sqrt_pi_power};
    }
    friend PiScaled operator/(const PiScaled& a, const PiScaled& b) {
        return {a.coeff / b.coeff, a.sqrt_pi_power - b.sqrt_pi_power};
    }
    friend bool operator==(const PiScaled& a, const PiScaled& b) {
        return a.coeff == b.coeff && (a.sqrt_pi_power == b.sqrt_pi_power || a.coeff == 0);
    }
};

/// Gamma(k/2) for positive integer k: a rational times sqrt(pi)^{0 or 1}.
struct HalfGamma {
    Rational rational_part;
    int sqrt_pi_power = 0;  // 0 or 1

    PiScaled as_pi_scaled() const { return {rational_part, sqrt_pi_power}; }
};

/// Gamma(k/2), computed exactly by the descent Gamma(x+1) = x Gamma(x)
/// down to Gamma(1) = 1 or Gamma(1/2) = sqrt(pi).  Throws on k < 1.
HalfGamma gamma_half(int k);

/// Surface area of the unit sphere S^{n-1}: 2 pi^{n/2} / Gamma(n/2).
PiScaled sphere_surface_unit(int n);

/// Surface area of S_r^{n-1}; exact when the radius is rational.
PiScaled sphere_surface_exact(int n, const Rational& r);
double sphere_surface(int n, double r);

/// Mass of the ultraspherical weight, mu(I) = int_{-1}^{1} (1-x^2)^{(n-3)/2} dx
/// = sqrt(pi) Gamma((n-1)/2) / Gamma(n/2).
PiScaled ultraspherical_mass(int n);

/// Continuous average of a monomial over the sphere of radius r: the average
/// equals `value * r^radius_exponent`, and value is exactly rational (every
/// pi factor cancels).
struct ExactMoment {
    Rational value;
    unsigned radius_exponent = 0;

    double at_radius(double r) const { return to_double(value) * ipow(r, radius_exponent); }
    Rational at_radius_exact(const Rational& r) const {
        return value * rational_pow(r, radius_exponent);
    }
};

/// Average of prod_l x_l^{alpha_l} over the unit sphere S^{n-1} in R^n.
/// Zero as soon as one exponent is odd; otherwise a ratio of half-integer
/// gamma products.
ExactMoment sphere_monomial_average(int n, std::span<const unsigned> exponents);
double sphere_monomial_average(int n, std::span<const unsigned> exponents, double r);

/// Normalized interval moment (1/mu(I)) int_{-1}^{1} x^k (1-x^2)^{(n-3)/2} dx.
Rational interval_monomial_average(int n, unsigned k);

/// Normalized moment with the lifted weight (1-x^2)^{m/2} x^k mu(x), m even;
/// evaluated by binomial expansion of (1-x^2)^{m/2}.
Rational interval_monomial_average_weighted(int n, unsigned m, unsigned k);

}  // namespace tdesign

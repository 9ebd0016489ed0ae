#include "tdesign/exact_moments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tdesign {

double PiScaled::value() const {
    return to_double(coeff) * std::pow(std::numbers::pi, 0.5 * sqrt_pi_power);
}

HalfGamma gamma_half(int k) {
    if (k < 1) throw std::invalid_argument("gamma_half: k must be a positive integer");
    Rational r = 1;
    while (k > 2) {
        k -= 2;
        r *= Rational(k, 2);
    }
    // k is now 1 (Gamma(1/2) = sqrt(pi)) or 2 (Gamma(1) = 1)
    return {r, k == 1 ? 1 : 0};
}

PiScaled sphere_surface_unit(int n) {
    if (n < 2) throw std::invalid_argument("sphere_surface: dimension must be >= 2");
    return PiScaled{2, n} / gamma_half(n).as_pi_scaled();
}

PiScaled sphere_surface_exact(int n, const Rational& r) {
    if (r <= 0) throw std::invalid_argument("sphere_surface: radius must be positive");
    PiScaled unit = sphere_surface_unit(n);
    unit.coeff *= rational_pow(r, n - 1);
    return unit;
}

double sphere_surface(int n, double r) {
    if (r <= 0) throw std::invalid_argument("sphere_surface: radius must be positive");
    return sphere_surface_unit(n).value() * ipow(r, static_cast<unsigned>(n - 1));
}

PiScaled ultraspherical_mass(int n) {
    if (n < 2) throw std::invalid_argument("ultraspherical_mass: dimension must be >= 2");
    return PiScaled{1, 1} * gamma_half(n - 1).as_pi_scaled() / gamma_half(n).as_pi_scaled();
}

ExactMoment sphere_monomial_average(int n, std::span<const unsigned> exponents) {
    if (n < 2) throw std::invalid_argument("sphere_monomial_average: dimension must be >= 2");
    if (static_cast<int>(exponents.size()) != n)
        throw std::invalid_argument("sphere_monomial_average: exponent tuple size != dimension");

    unsigned total = 0;
    bool odd = false;
    for (unsigned a : exponents) {
        total += a;
        odd = odd || (a % 2 != 0);
    }
    if (odd) return {Rational(0), total};

    // Gamma(n/2) prod_l Gamma((alpha_l+1)/2) / (pi^{n/2} Gamma((n+sum)/2))
    PiScaled num = gamma_half(n).as_pi_scaled();
    for (unsigned a : exponents) num = num * gamma_half(static_cast<int>(a) + 1).as_pi_scaled();
    PiScaled den = PiScaled{1, n} * gamma_half(n + static_cast<int>(total)).as_pi_scaled();
    PiScaled avg = num / den;
    if (avg.sqrt_pi_power != 0)
        throw std::logic_error("sphere_monomial_average: pi factors failed to cancel");
    return {avg.coeff, total};
}

double sphere_monomial_average(int n, std::span<const unsigned> exponents, double r) {
    if (r <= 0) throw std::invalid_argument("sphere_monomial_average: radius must be positive");
    return sphere_monomial_average(n, exponents).at_radius(r);
}

Rational interval_monomial_average(int n, unsigned k) {
    if (n < 2) throw std::invalid_argument("interval_monomial_average: dimension must be >= 2");
    if (k % 2 != 0) return 0;
    // Gamma((k+1)/2) Gamma(n/2) / (Gamma((k+n)/2) sqrt(pi))
    PiScaled num = gamma_half(static_cast<int>(k) + 1).as_pi_scaled() * gamma_half(n).as_pi_scaled();
    PiScaled den = gamma_half(static_cast<int>(k) + n).as_pi_scaled() * PiScaled{1, 1};
    PiScaled avg = num / den;
    if (avg.sqrt_pi_power != 0)
        throw std::logic_error("interval_monomial_average: pi factors failed to cancel");
    return avg.coeff;
}

Rational interval_monomial_average_weighted(int n, unsigned m, unsigned k) {
    if (m % 2 != 0)
        throw std::invalid_argument("interval_monomial_average_weighted: m must be even");
    Rational sum = 0;
    const unsigned half = m / 2;
    for (unsigned j = 0; j <= half; ++j) {
        Rational term = Rational(binomial(half, j)) * interval_monomial_average(n, k + 2 * j);
        if (j % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

}  // namespace tdesign

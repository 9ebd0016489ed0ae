#include "tdesign/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tdesign {

namespace {

double jacobi_value(unsigned s, double a, double b, double x) {
    if (s == 0) return 1.0;
    double pm1 = 1.0;
    // the a == b form keeps P_s(-x) == (-1)^s P_s(x) bit-exact
    double p = a == b ? (a + 1.0) * x : (a + 1.0) + 0.5 * (a + b + 2.0) * (x - 1.0);
    for (unsigned j = 2; j <= s; ++j) {
        const double jj = static_cast<double>(j);
        const double c1 = 2.0 * jj * (jj + a + b) * (2.0 * jj + a + b - 2.0);
        const double c2 = (2.0 * jj + a + b - 1.0) * (a * a - b * b);
        const double c3 =
            (2.0 * jj + a + b - 1.0) * (2.0 * jj + a + b) * (2.0 * jj + a + b - 2.0);
        const double c4 = 2.0 * (jj + a - 1.0) * (jj + b - 1.0) * (2.0 * jj + a + b);
        const double next = ((c2 + c3 * x) * p - c4 * pm1) / c1;
        pm1 = p;
        p = next;
    }
    return p;
}

// |P_s^{(a,a)}(1)| = binom(s+a, s), the natural magnitude for residual scaling.
double jacobi_at_one(unsigned s, double a) {
    double v = 1.0;
    for (unsigned j = 1; j <= s; ++j) v *= (a + j) / j;
    return v;
}

}  // namespace

JacobiValue jacobi_eval(const JacobiSpec& spec, double x) {
    if (spec.alpha <= -1.0 || spec.beta <= -1.0)
        throw std::invalid_argument("jacobi_eval: parameters must exceed -1");
    JacobiValue out;
    out.value = jacobi_value(spec.degree, spec.alpha, spec.beta, x);
    out.derivative =
        spec.degree == 0
            ? 0.0
            : 0.5 * (spec.degree + spec.alpha + spec.beta + 1.0) *
                  jacobi_value(spec.degree - 1, spec.alpha + 1.0, spec.beta + 1.0, x);
    return out;
}

RootSet gegenbauer_roots(unsigned s, int n) {
    if (s < 1) throw std::invalid_argument("gegenbauer_roots: degree must be >= 1");
    if (n < 2) throw std::invalid_argument("gegenbauer_roots: dimension must be >= 2");

    const double a = 0.5 * (n - 3);
    const JacobiSpec spec{s, a, a};
    const double residual_scale = std::max(1.0, jacobi_at_one(s, a));

    // Bracket the s sign changes on a theta-uniform grid (dense enough that
    // consecutive roots can never share a cell), then bisect + Newton-polish.
    const unsigned grid = 16 * s + 16;
    std::vector<double> roots;
    roots.reserve(s);

    double x_prev = -1.0;
    double f_prev = jacobi_value(s, a, a, x_prev);
    for (unsigned i = 1; i <= grid; ++i) {
        const double x_cur = i == grid ? 1.0 : -std::cos(std::numbers::pi * i / grid);
        const double f_cur = jacobi_value(s, a, a, x_cur);
        if ((f_prev < 0.0) != (f_cur < 0.0)) {
            double lo = x_prev, hi = x_cur, flo = f_prev;
            for (int iter = 0; iter < 60; ++iter) {
                const double mid = 0.5 * (lo + hi);
                const double fmid = jacobi_value(s, a, a, mid);
                if ((fmid < 0.0) == (flo < 0.0)) {
                    lo = mid;
                    flo = fmid;
                } else {
                    hi = mid;
                }
            }
            double root = 0.5 * (lo + hi);
            for (int iter = 0; iter < 8; ++iter) {
                const JacobiValue v = jacobi_eval(spec, root);
                if (v.derivative == 0.0) break;
                const double step = v.value / v.derivative;
                root -= step;
                if (std::abs(step) < 1e-17) break;
            }
            if (std::abs(jacobi_value(s, a, a, root)) > 1e-13 * residual_scale) {
                std::ostringstream msg;
                msg << "gegenbauer_roots: Newton failed to converge for s=" << s << " n=" << n
                    << " in bracket [" << x_prev << ", " << x_cur << "]";
                throw std::runtime_error(msg.str());
            }
            roots.push_back(root);
        }
        x_prev = x_cur;
        f_prev = f_cur;
    }

    if (roots.size() != s) {
        std::ostringstream msg;
        msg << "gegenbauer_roots: expected " << s << " roots, bracketed " << roots.size()
            << " (s=" << s << ", n=" << n << ")";
        throw std::runtime_error(msg.str());
    }
    std::sort(roots.begin(), roots.end());

    // Snap to exact antipodal pairs; odd-degree middle root is exactly 0.
    for (unsigned i = 0; i < s / 2; ++i) {
        const double m = 0.5 * (std::abs(roots[i]) + std::abs(roots[s - 1 - i]));
        roots[i] = -m;
        roots[s - 1 - i] = m;
    }
    if (s % 2 == 1) roots[s / 2] = 0.0;

    RootSet out;
    out.degree = s;
    out.dim = n;
    out.roots = roots;
    out.residuals.reserve(s);
    for (double c : roots) {
        const double r = std::abs(jacobi_value(s, a, a, c));
        if (r > 1e-13 * residual_scale) {
            std::ostringstream msg;
            msg << "gegenbauer_roots: residual " << r << " above threshold at root " << c
                << " (s=" << s << ", n=" << n << ")";
            throw std::runtime_error(msg.str());
        }
        out.residuals.push_back(r);
    }
    return out;
}

PiScaled christoffel_prefactor(unsigned s, int n) {
    if (n < 2) throw std::invalid_argument("christoffel_prefactor: dimension must be >= 2");
    // alpha = beta = (n-3)/2:
    //   2^{n-2} Gamma((n-1)/2+s)^2 / (s! Gamma(n+s-2))
    PiScaled g = gamma_half(n - 1 + 2 * static_cast<int>(s)).as_pi_scaled();
    PiScaled num = g * g;
    num.coeff *= rational_pow(Rational(2), n - 2);
    PiScaled den = gamma_half(2 * (n + static_cast<int>(s) - 2)).as_pi_scaled();
    den.coeff *= Rational(factorial(s));
    return num / den;
}

std::vector<double> christoffel_weights(unsigned s, int n, const RootSet& roots) {
    if (roots.degree != s || roots.dim != n)
        throw std::invalid_argument("christoffel_weights: root set built for different (s, n)");
    const double pref = christoffel_prefactor(s, n).value();
    const JacobiSpec spec{s, 0.5 * (n - 3), 0.5 * (n - 3)};

    std::vector<double> weights(s);
    for (unsigned i = 0; i < s; ++i) {
        const double c = roots.roots[i];
        const double d = jacobi_eval(spec, c).derivative;
        const double denom = (1.0 - c * c) * d * d;
        if (denom == 0.0)
            throw std::runtime_error("christoffel_weights: vanishing denominator at a root");
        weights[i] = pref / denom;
    }
    // Pair symmetrization; for alpha = beta the two values are already
    // bit-equal, this just pins the invariant.
    for (unsigned i = 0; i < s / 2; ++i) {
        const double m = 0.5 * (weights[i] + weights[s - 1 - i]);
        weights[i] = m;
        weights[s - 1 - i] = m;
    }
    for (double w : weights)
        if (!(w > 0.0)) throw std::runtime_error("christoffel_weights: non-positive weight");
    return weights;
}

std::vector<Rational> gegenbauer_coefficients(unsigned d, const Rational& lambda) {
    if (lambda <= 0) throw std::invalid_argument("gegenbauer_coefficients: lambda must be > 0");
    // Dense coefficient vectors in u, c[k] = coefficient of u^k.
    std::vector<Rational> prev{1};  // C_0 = 1
    if (d == 0) return prev;
    std::vector<Rational> cur{0, 2 * lambda};  // C_1 = 2 lambda u
    for (unsigned j = 2; j <= d; ++j) {
        std::vector<Rational> next(j + 1, Rational(0));
        const Rational f1 = Rational(2) * (Rational(j - 1) + lambda) / Rational(j);
        const Rational f2 = (Rational(j - 2) + 2 * lambda) / Rational(j);
        for (unsigned k = 0; k < cur.size(); ++k)
            if (cur[k] != 0) next[k + 1] += f1 * cur[k];
        for (unsigned k = 0; k < prev.size(); ++k)
            if (prev[k] != 0) next[k] -= f2 * prev[k];
        prev = std::move(cur);
        cur = std::move(next);
    }
    // Repack as a[j] = coefficient of u^{d-2j}; parity makes the others zero.
    std::vector<Rational> out(d / 2 + 1);
    for (unsigned j = 0; j <= d / 2; ++j) out[j] = cur[d - 2 * j];
    return out;
}

}  // namespace tdesign

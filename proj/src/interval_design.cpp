#include "tdesign/interval_design.hpp"

#include <cmath>
#include <stdexcept>

namespace tdesign {

IntervalDesign build_interval_design(int n, int t) {
    if (n < 2) throw std::invalid_argument("build_interval_design: dimension must be >= 2");
    if (t < 0) throw std::invalid_argument("build_interval_design: strength must be >= 0");

    const unsigned s = static_cast<unsigned>(t / 2) + 1;
    RootSet roots = gegenbauer_roots(s, n);
    std::vector<double> weights = christoffel_weights(s, n, roots);
    const double mass = ultraspherical_mass(n).value();

    IntervalDesign d;
    d.n = n;
    d.t = t;
    d.nodes = std::move(roots.roots);
    d.weights = std::move(weights);
    for (double& w : d.weights) w /= mass;
    // Keep the normalized weights exactly symmetric.
    for (unsigned i = 0; i < s / 2; ++i) {
        const double m = 0.5 * (d.weights[i] + d.weights[s - 1 - i]);
        d.weights[i] = m;
        d.weights[s - 1 - i] = m;
    }
    return d;
}

IntervalReport verify_interval_design(const IntervalDesign& d, int t, double tol) {
    if (d.nodes.size() != d.weights.size() || d.nodes.empty())
        throw std::invalid_argument("verify_interval_design: malformed design");
    const std::size_t s = d.nodes.size();

    IntervalReport report;
    report.requested_strength = t;
    report.residuals.reserve(t + 1);
    for (int k = 0; k <= t; ++k) {
        // Sum antipodal pairs first so odd powers cancel exactly.
        double sum = 0.0, comp = 0.0;
        auto add = [&](double term) {
            const double y = term - comp;
            const double v = sum + y;
            comp = (v - sum) - y;
            sum = v;
        };
        for (std::size_t i = 0; i < s / 2; ++i) {
            add(d.weights[i] * ipow(d.nodes[i], k) +
                d.weights[s - 1 - i] * ipow(d.nodes[s - 1 - i], k));
        }
        if (s % 2 == 1) add(d.weights[s / 2] * ipow(d.nodes[s / 2], k));

        const double exact = to_double(interval_monomial_average(d.n, static_cast<unsigned>(k)));
        const double residual = std::abs(sum - exact) / std::max(1.0, std::abs(exact));
        report.residuals.push_back(residual);
        if (residual > report.max_residual) report.max_residual = residual;
        if (residual > tol && report.first_failed_degree < 0) report.first_failed_degree = k;
    }
    report.pass = report.first_failed_degree < 0;
    return report;
}

}  // namespace tdesign

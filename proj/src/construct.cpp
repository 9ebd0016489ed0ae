#include "tdesign/construct.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tdesign {

std::vector<double> star_lift_point(std::span<const double> y, double c) {
    if (std::abs(c) > 1.0)
        throw std::invalid_argument("star_lift_point: |c| must be <= 1");
    const double shrink = std::sqrt(1.0 - c * c);
    double normsq = 0.0;
    for (double v : y) normsq += v * v;
    std::vector<double> out;
    out.reserve(y.size() + 1);
    for (double v : y) out.push_back(shrink * v);
    out.push_back(c * std::sqrt(normsq));
    return out;
}

LiftPlan make_lift_plan(int target_dim, int t) {
    if (target_dim < 3)
        throw std::invalid_argument("make_lift_plan: target dimension must be >= 3");
    return LiftPlan{target_dim - 1, target_dim, t, build_interval_design(target_dim, t)};
}

WeightedPointSet lift_design(const WeightedPointSet& src, const LiftPlan& plan) {
    if (src.dim() != plan.source_dim)
        throw std::invalid_argument("lift_design: plan built for a different source dimension");
    if (plan.interval.n != plan.target_dim || plan.interval.t < plan.t)
        throw std::invalid_argument("lift_design: plan's interval design does not match");
#ifndef NDEBUG
    assert(verify_euclidean_design(src, plan.t).pass && "lift_design: source is not a t-design");
#endif
    std::vector<std::vector<double>> points;
    std::vector<double> weights;
    points.reserve(src.size() * plan.interval.nodes.size());
    weights.reserve(points.capacity());
    for (std::size_t i = 0; i < src.size(); ++i) {
        for (std::size_t j = 0; j < plan.interval.nodes.size(); ++j) {
            points.push_back(star_lift_point(src.point(i), plan.interval.nodes[j]));
            weights.push_back(src.weight(i) * plan.interval.weights[j]);
        }
    }
    return WeightedPointSet(plan.target_dim, std::move(points), std::move(weights));
}

WeightedPointSet lift_design(const WeightedPointSet& src, int t) {
    return lift_design(src, make_lift_plan(src.dim() + 1, t));
}

WeightedPointSet lift_to_dimension(const WeightedPointSet& planar, int target_dim, int t) {
    if (planar.dim() != 2)
        throw std::invalid_argument("lift_to_dimension: source must be planar");
    if (target_dim < 2)
        throw std::invalid_argument("lift_to_dimension: target dimension must be >= 2");
    WeightedPointSet design = planar;
    while (design.dim() < target_dim) design = lift_design(design, t);
    return design;
}

WeightedPointSet tight_polygon_design(int t, std::vector<double> radii) {
    if (t < 1) throw std::invalid_argument("tight_polygon_design: strength must be >= 1");
    const int p = static_cast<int>(radii.size());
    if (p < 1 || p > (t + 5) / 4)
        throw std::invalid_argument("tight_polygon_design: need 1 <= p <= floor((t+5)/4)");
    std::sort(radii.begin(), radii.end());
    if (radii.front() <= 0.0)
        throw std::invalid_argument("tight_polygon_design: radii must be positive");
    for (int k = 1; k < p; ++k)
        if (radii[k] == radii[k - 1])
            throw std::invalid_argument("tight_polygon_design: radii must be distinct");

    const int m = t + 3 - 2 * p;
    std::vector<double> w(p);
    w[0] = 1.0 / ipow(radii[0], static_cast<unsigned>(m));
    for (int k = 2; k <= p; ++k) {
        double prod = 1.0;
        for (int l = 2; l <= p; ++l) {
            if (l == k) continue;
            prod *= (radii[0] * radii[0] - radii[l - 1] * radii[l - 1]) /
                    (radii[k - 1] * radii[k - 1] - radii[l - 1] * radii[l - 1]);
        }
        const double sign = k % 2 == 0 ? 1.0 : -1.0;
        w[k - 1] = sign * prod / ipow(radii[k - 1], static_cast<unsigned>(m));
        if (!(w[k - 1] > 0.0))
            throw std::logic_error("tight_polygon_design: weight formula gave a non-positive weight");
    }

    std::vector<std::vector<double>> points;
    std::vector<double> weights;
    points.reserve(static_cast<std::size_t>(p) * m);
    for (int k = 1; k <= p; ++k) {
        for (int j = 1; j <= m; ++j) {
            // the k-dependent half-step rotation is what makes p >= 2 work
            const double angle = (2.0 * j + k) * std::numbers::pi / m;
            points.push_back({radii[k - 1] * std::cos(angle), radii[k - 1] * std::sin(angle)});
            weights.push_back(w[k - 1]);
        }
    }
    return WeightedPointSet(2, std::move(points), std::move(weights));
}

std::vector<std::vector<int>> lattice_shell(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("lattice_shell: need 1 <= k <= n");
    std::vector<std::vector<int>> out;
    std::vector<int> support(k);
    auto emit_signs = [&]() {
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            std::vector<int> point(n, 0);
            for (int i = 0; i < k; ++i) point[support[i]] = (mask >> i) & 1u ? -1 : 1;
            out.push_back(std::move(point));
        }
    };
    auto rec = [&](auto&& self, int pos, int first) -> void {
        if (pos == k) {
            emit_signs();
            return;
        }
        for (int v = first; v <= n - (k - pos); ++v) {
            support[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace {

void validate_lambda(double lambda) {
    if (!(lambda > 0.0) || lambda == 1.0)
        throw std::invalid_argument("fg case: lambda must be positive and != 1");
}

}  // namespace

FGCase make_fg_case(FGCaseTag tag, double lambda) {
    validate_lambda(lambda);
    FGCase fg;
    fg.tag = tag;
    fg.lambda = lambda;
    switch (tag) {
        case FGCaseTag::d3t5:
            fg.dim = 3;
            fg.t = 5;
            fg.shells = {1, 3};
            fg.radii = {1.0, lambda};
            fg.shell_weights = {1.0, 9.0 / (8.0 * ipow(lambda, 4))};
            break;
        case FGCaseTag::d3t7: {
            fg.dim = 3;
            fg.t = 7;
            fg.shells = {1, 2, 3};
            const double q = 2.0 * lambda + 3.0;
            fg.radii = {1.0, std::sqrt(q / (5.0 * lambda)), std::sqrt(q / 5.0)};
            fg.shell_weights = {1.0, 100.0 * ipow(lambda, 3) / ipow(q, 3), 675.0 / (8.0 * ipow(q, 3))};
            break;
        }
        case FGCaseTag::d4t7:
            fg.dim = 4;
            fg.t = 7;
            fg.shells = {1, 2, 4};
            fg.radii = {1.0, lambda, 1.0};
            fg.shell_weights = {1.0, 1.0 / ipow(lambda, 6), 1.0};
            break;
    }
    for (std::size_t a = 0; a < fg.radii.size(); ++a)
        for (std::size_t b = a + 1; b < fg.radii.size(); ++b)
            if (fg.tag != FGCaseTag::d4t7 && fg.radii[a] == fg.radii[b])
                throw std::logic_error("fg case: layer radii must be pairwise distinct");
    return fg;
}

FGExactTable fg_case_table(FGCaseTag tag, const Rational& lambda) {
    if (lambda <= 0 || lambda == 1)
        throw std::invalid_argument("fg case: lambda must be positive and != 1");
    FGExactTable table;
    switch (tag) {
        case FGCaseTag::d3t5:
            table.shells = {1, 3};
            table.radius_sq = {1, lambda * lambda};
            table.weights = {1, Rational(9) / (8 * rational_pow(lambda, 4))};
            break;
        case FGCaseTag::d3t7: {
            table.shells = {1, 2, 3};
            const Rational q = 2 * lambda + 3;
            table.radius_sq = {1, q / (5 * lambda), q / 5};
            table.weights = {1, 100 * rational_pow(lambda, 3) / rational_pow(q, 3),
                             Rational(675) / (8 * rational_pow(q, 3))};
            break;
        }
        case FGCaseTag::d4t7:
            table.shells = {1, 2, 4};
            table.radius_sq = {1, lambda * lambda, 1};
            table.weights = {1, 1 / rational_pow(lambda, 6), 1};
            break;
    }
    return table;
}

WeightedPointSet fg_design(const FGCase& fg) {
    std::vector<std::vector<double>> points;
    std::vector<double> weights;
    for (std::size_t s = 0; s < fg.shells.size(); ++s) {
        const int k = fg.shells[s];
        const double scale = fg.radii[s] / std::sqrt(static_cast<double>(k));
        for (const std::vector<int>& v : lattice_shell(fg.dim, k)) {
            std::vector<double> point(fg.dim);
            for (int l = 0; l < fg.dim; ++l) point[l] = scale * v[l];
            points.push_back(std::move(point));
            weights.push_back(fg.shell_weights[s]);
        }
    }
    return WeightedPointSet(fg.dim, std::move(points), std::move(weights));
}

}  // namespace tdesign

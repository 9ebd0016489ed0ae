#include "tdesign/design.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tdesign/exact_moments.hpp"

namespace tdesign {

namespace {

double kahan_sum(const std::vector<double>& terms) {
    double sum = 0.0, comp = 0.0;
    for (double term : terms) {
        const double y = term - comp;
        const double v = sum + y;
        comp = (v - sum) - y;
        sum = v;
    }
    return sum;
}

std::string monomial_label(const std::vector<unsigned>& e) {
    std::ostringstream os;
    os << "x^(";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
    os << ")";
    return os.str();
}

}  // namespace

WeightedPointSet::WeightedPointSet(int dim, std::vector<std::vector<double>> points,
                                   std::vector<double> weights)
    : dim_(dim), points_(std::move(points)), weights_(std::move(weights)) {
    if (dim_ < 2) throw std::invalid_argument("WeightedPointSet: dimension must be >= 2");
    if (points_.empty()) throw std::invalid_argument("WeightedPointSet: empty point set");
    if (points_.size() != weights_.size())
        throw std::invalid_argument("WeightedPointSet: points/weights size mismatch");
    norms_.reserve(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (static_cast<int>(points_[i].size()) != dim_)
            throw std::invalid_argument("WeightedPointSet: point has wrong dimension");
        double sq = 0.0;
        for (double c : points_[i]) sq += c * c;
        const double norm = std::sqrt(sq);
        if (norm == 0.0)
            throw std::invalid_argument(
                "WeightedPointSet: the origin is not an admissible design point");
        if (!(weights_[i] > 0.0))
            throw std::invalid_argument("WeightedPointSet: weights must be strictly positive");
        norms_.push_back(norm);
    }
}

double WeightedPointSet::total_weight() const {
    return kahan_sum(weights_);
}

LayeredDesign layer_decompose(const WeightedPointSet& x, double group_tol) {
    std::vector<std::size_t> order(x.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return x.norm(a) < x.norm(b); });

    LayeredDesign ld{x, {}, std::vector<std::size_t>(x.size(), 0), {}, {}};
    double group_start = -1.0;
    for (std::size_t idx : order) {
        const double r = x.norm(idx);
        if (ld.radii.empty() || r - group_start > group_tol * r) {
            ld.radii.push_back(0.0);
            ld.layer_mass.push_back(0.0);
            ld.layer_size.push_back(0);
            group_start = r;
        }
        const std::size_t layer = ld.radii.size() - 1;
        ld.layer_of[idx] = layer;
        ld.layer_mass[layer] += x.weight(idx);
        ld.layer_size[layer] += 1;
        ld.radii[layer] += r;  // accumulate, averaged below
    }
    for (std::size_t l = 0; l < ld.radii.size(); ++l) ld.radii[l] /= ld.layer_size[l];
    return ld;
}

std::vector<std::vector<unsigned>> monomials_up_to_degree(int n, int t) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(n, 0);
    for (int d = 0; d <= t; ++d) {
        // lexicographic enumeration of compositions of d into n parts
        auto rec = [&](auto&& self, int pos, int rem) -> void {
            if (pos == n - 1) {
                cur[pos] = static_cast<unsigned>(rem);
                out.push_back(cur);
                return;
            }
            for (int v = rem; v >= 0; --v) {
                cur[pos] = static_cast<unsigned>(v);
                self(self, pos + 1, rem - v);
            }
        };
        rec(rec, 0, d);
    }
    return out;
}

DesignReport verify_euclidean_design(const WeightedPointSet& x, int t, double tol, Exec exec,
                                     int t_max_probe) {
    if (t < 0) throw std::invalid_argument("verify_euclidean_design: strength must be >= 0");
    const int probe = t_max_probe < t ? t + 2 : t_max_probe;
    const int n = x.dim();

    const LayeredDesign ld = layer_decompose(x);
    // S_d = sum_r W_r r^d, the exact left-hand scaling per total degree.
    std::vector<double> layer_pow(probe + 1, 0.0);
    for (int d = 0; d <= probe; ++d) {
        double s = 0.0;
        for (std::size_t l = 0; l < ld.layer_count(); ++l)
            s += ld.layer_mass[l] * ipow(ld.radii[l], static_cast<unsigned>(d));
        layer_pow[d] = s;
    }

    const std::vector<std::vector<unsigned>> monos = monomials_up_to_degree(n, probe);
    std::vector<double> residual(monos.size());

    for_each_index(monos.size(), exec, [&](std::size_t m) {
        const std::vector<unsigned>& alpha = monos[m];
        const ExactMoment em = sphere_monomial_average(n, alpha);
        const unsigned d = em.radius_exponent;
        const double lhs = to_double(em.value) * layer_pow[d];

        double sum = 0.0, comp = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double term = x.weight(i);
            const std::vector<double>& p = x.point(i);
            for (int l = 0; l < n; ++l)
                if (alpha[l]) term *= ipow(p[l], alpha[l]);
            const double y = term - comp;
            const double v = sum + y;
            comp = (v - sum) - y;
            sum = v;
        }
        const double scale = std::max({1.0, std::abs(lhs), layer_pow[d]});
        residual[m] = std::abs(lhs - sum) / scale;
    });

    DesignReport report;
    report.method = "moments";
    report.requested_strength = t;
    report.tolerance = tol;
    report.antipodal = is_antipodal(x, tol);

    std::vector<ResidualRow> rows(probe + 1);
    for (int d = 0; d <= probe; ++d) rows[d].degree = d;
    for (std::size_t m = 0; m < monos.size(); ++m) {
        const int d = static_cast<int>(
            std::accumulate(monos[m].begin(), monos[m].end(), 0u));
        if (residual[m] >= rows[d].worst) {
            rows[d].worst = residual[m];
            rows[d].worst_item = monomial_label(monos[m]);
        }
    }
    report.residuals = std::move(rows);

    int verified = -1;
    for (int d = 0; d <= probe; ++d) {
        if (report.residuals[d].worst > tol) break;
        verified = d;
    }
    report.verified_strength = verified;
    report.pass = verified >= t;
    for (int d = 0; d <= t; ++d)
        report.max_residual = std::max(report.max_residual, report.residuals[d].worst);
    return report;
}

long long dim_hom(int n, long long s) {
    if (n < 1) throw std::invalid_argument("dim_hom: dimension must be >= 1");
    if (s < 0) return 0;
    return binomial(s + n - 1, n - 1).convert_to<long long>();
}

FisherBound fisher_bound(int n, int p, int t) {
    if (n < 2) throw std::invalid_argument("fisher_bound: dimension must be >= 2");
    if (p < 1) throw std::invalid_argument("fisher_bound: layer count must be >= 1");
    if (t < 0) throw std::invalid_argument("fisher_bound: strength must be >= 0");

    FisherBound fb;
    fb.n = n;
    fb.p = p;
    fb.t = t;
    fb.antipodality_required = (t % 2 == 1);
    const int half_t = t / 2;
    const int half_tm1 = t == 0 ? -1 : (t - 1) / 2;  // floor, not truncation
    for (int k = 1; k <= p; ++k) {
        const long long nk = dim_hom(n, half_t + 2 - 2 * k) + dim_hom(n, half_tm1 + 2 - 2 * k);
        fb.per_k.push_back(nk);
        fb.total += nk;
    }
    if (t % 2 == 0) {
        // Closed form for even t: binom(t/2+n, n) - binom(t/2-2p+n, n).
        const long long closed =
            (binomial(t / 2 + n, n) - binomial(t / 2 - 2 * p + n, n)).convert_to<long long>();
        if (closed != fb.total)
            throw std::logic_error("fisher_bound: closed form disagrees with the N_k sum");
    }
    return fb;
}

bool is_antipodal(const WeightedPointSet& x, double tol) {
    const std::size_t size = x.size();
    double wmax = 0.0;
    for (std::size_t i = 0; i < size; ++i) wmax = std::max(wmax, x.weight(i));
    std::vector<bool> used(size, false);
    for (std::size_t i = 0; i < size; ++i) {
        if (used[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < size; ++j) {
            if (used[j] || j == i) continue;
            double distsq = 0.0;
            for (int l = 0; l < x.dim(); ++l) {
                const double d = x.point(i)[l] + x.point(j)[l];
                distsq += d * d;
            }
            if (std::sqrt(distsq) <= tol * x.norm(i) &&
                std::abs(x.weight(i) - x.weight(j)) <= tol * wmax) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

Tightness is_tight(const LayeredDesign& ld, int t, const DesignReport& report) {
    if (!report.pass || report.requested_strength < t)
        throw std::invalid_argument("is_tight: needs a passing report at strength >= t");
    if (t % 2 == 1 && !report.antipodal) return Tightness::inapplicable;
    const FisherBound fb = fisher_bound(ld.base.dim(), static_cast<int>(ld.layer_count()), t);
    return static_cast<long long>(ld.base.size()) == fb.total ? Tightness::tight
                                                              : Tightness::not_tight;
}

}  // namespace tdesign

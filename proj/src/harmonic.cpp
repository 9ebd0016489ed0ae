#include "tdesign/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "tdesign/orthopoly.hpp"

namespace tdesign {

// ---------------------------------------------------------------------------
// RationalPoly

RationalPoly RationalPoly::monomial(int nvars, std::vector<unsigned> exps, Rational coeff) {
    RationalPoly p(nvars);
    p.add_term(exps, coeff);
    return p;
}

void RationalPoly::add_term(const std::vector<unsigned>& exps, const Rational& coeff) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("RationalPoly: exponent tuple has wrong arity");
    if (coeff == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    if (a.nvars_ != b.nvars_)
        throw std::invalid_argument("RationalPoly: arity mismatch in product");
    RationalPoly out(a.nvars_);
    std::vector<unsigned> e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

RationalPoly RationalPoly::laplacian() const {
    RationalPoly out(nvars_);
    std::vector<unsigned> e(nvars_);
    for (const auto& [exps, c] : terms_) {
        for (int l = 0; l < nvars_; ++l) {
            if (exps[l] < 2) continue;
            e = exps;
            e[l] -= 2;
            out.add_term(e, c * exps[l] * (exps[l] - 1));
        }
    }
    return out;
}

long long RationalPoly::homogeneous_degree() const {
    long long degree = -1;
    for (const auto& [exps, c] : terms_) {
        long long d = 0;
        for (unsigned v : exps) d += v;
        if (degree == -1)
            degree = d;
        else if (degree != d)
            return -1;
    }
    return degree == -1 ? 0 : degree;
}

void RationalPoly::normalize_integer() {
    if (terms_.empty()) return;
    BigInt den_lcm = 1;
    for (const auto& [e, c] : terms_) den_lcm = lcm(den_lcm, denominator(c));
    BigInt num_gcd = 0;
    for (auto& [e, c] : terms_) {
        c *= Rational(den_lcm);
        num_gcd = gcd(num_gcd, numerator(c));
    }
    if (num_gcd > 1)
        for (auto& [e, c] : terms_) c /= Rational(num_gcd);
    if (terms_.rbegin()->second < 0)
        for (auto& [e, c] : terms_) c = -c;
}

double RationalPoly::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(to_double(c)));
    return m;
}

double RationalPoly::evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("RationalPoly::evaluate: wrong point dimension");
    double sum = 0.0, comp = 0.0;
    for (const auto& [exps, c] : terms_) {
        double term = to_double(c);
        for (int l = 0; l < nvars_; ++l)
            if (exps[l]) term *= ipow(x[l], exps[l]);
        const double y = term - comp;
        const double v = sum + y;
        comp = (v - sum) - y;
        sum = v;
    }
    return sum;
}

Rational RationalPoly::evaluate_exact(std::span<const int> x) const {
    if (static_cast<int>(x.size()) != nvars_)
        throw std::invalid_argument("RationalPoly::evaluate_exact: wrong point dimension");
    Rational sum = 0;
    for (const auto& [exps, c] : terms_) {
        Rational term = c;
        for (int l = 0; l < nvars_; ++l) term *= rational_pow(Rational(x[l]), exps[l]);
        sum += term;
    }
    return sum;
}

HarmonicPoly HarmonicPoly::checked(RationalPoly p, const std::string& context) {
    const long long degree = p.homogeneous_degree();
    if (p.is_zero() || degree < 0)
        throw std::logic_error("HarmonicPoly: not a nonzero homogeneous polynomial" +
                               (context.empty() ? "" : " [" + context + "]"));
    if (!p.laplacian().is_zero())
        throw std::logic_error("HarmonicPoly: Laplacian does not vanish" +
                               (context.empty() ? "" : " [" + context + "]"));
    return HarmonicPoly(std::move(p), static_cast<unsigned>(degree));
}

// ---------------------------------------------------------------------------
// Phi basis

long long dim_harm(int n, long long s) {
    if (n < 2) throw std::invalid_argument("dim_harm: dimension must be >= 2");
    if (s < 0) return 0;
    return (binomial(n + s - 1, n - 1) - binomial(n + s - 3, n - 1)).convert_to<long long>();
}

namespace {

// h_1 = Re (x_{n-1} + i x_n)^M, h_2 = Im (...)^M  (variables are 0-based
// indices n-2 and n-1).
RationalPoly h_poly(int n, unsigned M, unsigned mu) {
    RationalPoly h(n);
    std::vector<unsigned> e(n, 0);
    for (unsigned j = (mu == 1 ? 0u : 1u); j <= M; j += 2) {
        Rational c = Rational(binomial(M, j));
        if ((j / 2) % 2 == 1) c = -c;  // i^j for even j, i^{j-1} factor for odd j
        e[n - 2] = M - j;
        e[n - 1] = j;
        h.add_term(e, c);
    }
    return h;
}

// g_k = r_k^{d} C_d^{lambda}(x_{k+1}/r_k) with d = m_k - m_{k+1},
// lambda = m_{k+1} + (n-k-2)/2 and r_k^2 = sum_{l=k+1}^{n} x_l^2; the parity
// of C_d makes this a true polynomial in x_{k+1} and r_k^2.
RationalPoly g_poly(int n, const std::vector<unsigned>& m, int k) {
    const unsigned d = m[k] - m[k + 1];
    const Rational lambda(2 * static_cast<long long>(m[k + 1]) + n - k - 2, 2);
    const std::vector<Rational> coef = gegenbauer_coefficients(d, lambda);

    RationalPoly r_sq(n);
    std::vector<unsigned> e(n, 0);
    for (int l = k; l < n; ++l) {
        std::fill(e.begin(), e.end(), 0u);
        e[l] = 2;
        r_sq.add_term(e, 1);
    }

    RationalPoly g(n);
    RationalPoly r_sq_pow = RationalPoly::monomial(n, std::vector<unsigned>(n, 0), 1);
    for (unsigned j = 0; j <= d / 2; ++j) {
        if (j > 0) r_sq_pow = r_sq_pow * r_sq;
        std::fill(e.begin(), e.end(), 0u);
        e[k] = d - 2 * j;
        g += r_sq_pow * RationalPoly::monomial(n, e, coef[j]);
    }
    return g;
}

void enumerate_chains(int n, unsigned s, std::vector<unsigned>& chain, std::size_t pos,
                      std::vector<std::vector<unsigned>>& out) {
    if (pos == chain.size()) {
        out.push_back(chain);
        return;
    }
    for (unsigned v = 0; v <= chain[pos - 1]; ++v) {
        chain[pos] = chain[pos - 1] - v;  // descending enumeration: m_pos from m_{pos-1} down
        enumerate_chains(n, s, chain, pos + 1, out);
    }
}

std::string chain_label(const std::vector<unsigned>& m, unsigned mu) {
    std::ostringstream os;
    os << "f_{";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ";" << mu << "}";
    return os.str();
}

}  // namespace

PhiBasis build_phi_basis(int n, unsigned s) {
    if (n < 2) throw std::invalid_argument("build_phi_basis: dimension must be >= 2");

    std::vector<std::vector<unsigned>> chains;
    std::vector<unsigned> chain(n - 1);
    chain[0] = s;
    enumerate_chains(n, s, chain, 1, chains);

    PhiBasis basis;
    basis.n = n;
    basis.s = s;
    for (const std::vector<unsigned>& m : chains) {
        const unsigned last = m[n - 2];
        const unsigned mu_max = std::min(2u, last + 1);
        for (unsigned mu = 1; mu <= mu_max; ++mu) {
            RationalPoly f = h_poly(n, last, mu);
            for (int k = n - 3; k >= 0; --k) f = f * g_poly(n, m, k);
            f.normalize_integer();
            basis.elements.push_back(
                PhiElement{m, mu, HarmonicPoly::checked(std::move(f), chain_label(m, mu))});
        }
    }
    if (static_cast<long long>(basis.elements.size()) != dim_harm(n, s))
        throw std::logic_error("build_phi_basis: element count != dim Harm_s");
    return basis;
}

PhiBasis feven_filter(const PhiBasis& basis) {
    PhiBasis out;
    out.n = basis.n;
    out.s = basis.s;
    for (const PhiElement& el : basis.elements) {
        const bool even_chain =
            std::all_of(el.m.begin(), el.m.end(), [](unsigned v) { return v % 2 == 0; });
        if (!even_chain || el.mu != 1) continue;
        for (const auto& [exps, c] : el.f.poly().terms())
            for (unsigned v : exps)
                if (v % 2 != 0)
                    throw std::logic_error("feven_filter: index-even element has odd exponent");
        out.elements.push_back(el);
    }
    return out;
}

HarmonicPoly special_harmonics(int n, SpecialHarmonic name, std::span<const int> indices) {
    const std::size_t need = name == SpecialHarmonic::f2    ? 1
                             : name == SpecialHarmonic::f63 ? 3
                                                            : 2;
    if (indices.size() != need)
        throw std::invalid_argument("special_harmonics: wrong number of variable indices");
    std::vector<int> idx(indices.begin(), indices.end());
    if (name == SpecialHarmonic::f2) idx.push_back(idx[0] + 1);
    for (std::size_t a = 0; a < idx.size(); ++a) {
        if (idx[a] < 1 || idx[a] > n)
            throw std::invalid_argument("special_harmonics: variable index out of range");
        for (std::size_t b = a + 1; b < idx.size(); ++b)
            if (idx[a] == idx[b])
                throw std::invalid_argument("special_harmonics: indices must be distinct");
    }

    RationalPoly p(n);
    auto term = [&](Rational c, std::initializer_list<std::pair<int, unsigned>> factors) {
        std::vector<unsigned> e(n, 0);
        for (auto [var, exp] : factors) e[idx[var] - 1] = exp;
        p.add_term(e, c);
    };
    switch (name) {
        case SpecialHarmonic::f2:
            term(1, {{0, 2}});
            term(-1, {{1, 2}});
            break;
        case SpecialHarmonic::f42:
            term(1, {{0, 4}});
            term(-6, {{0, 2}, {1, 2}});
            term(1, {{1, 4}});
            break;
        case SpecialHarmonic::f62:
            term(1, {{0, 6}});
            term(-15, {{0, 4}, {1, 2}});
            term(15, {{0, 2}, {1, 4}});
            term(-1, {{1, 6}});
            break;
        case SpecialHarmonic::f63:
            for (int v = 0; v < 3; ++v) term(2, {{v, 6}});
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b)
                    if (a != b) term(-15, {{a, 4}, {b, 2}});
            term(180, {{0, 2}, {1, 2}, {2, 2}});
            break;
    }
    return HarmonicPoly::checked(std::move(p), "special_harmonics");
}

long long shell_harmonic_sum(int n, int k, SpecialHarmonic name) {
    if (k < 1 || k > n) throw std::invalid_argument("shell_harmonic_sum: need 1 <= k <= n");
    const long long two_k = 1LL << k;
    const auto c = [&](long long top, long long bottom) {
        return binomial(top, bottom).convert_to<long long>();
    };
    switch (name) {
        case SpecialHarmonic::f42:
            return 2 * two_k * c(n - 1, k - 1) - 6 * two_k * c(n - 2, k - 2);
        case SpecialHarmonic::f63:
            return 6 * two_k * c(n - 1, k - 1) - 90 * two_k * c(n - 2, k - 2) +
                   180 * two_k * c(n - 3, k - 3);
        default:
            throw std::invalid_argument("shell_harmonic_sum: closed form only for f42/f63");
    }
}

// ---------------------------------------------------------------------------
// Harmonic verifier

namespace {

// Flattened double-precision view of a basis element for the hot loop;
// coefficients are scaled by 1/max|coeff| so residual scales stay comparable
// across elements.
struct CompiledPoly {
    std::vector<std::vector<unsigned>> exps;
    std::vector<double> coefs;
    unsigned degree = 0;

    double eval(const std::vector<double>& x) const {
        double sum = 0.0, comp = 0.0;
        for (std::size_t t = 0; t < coefs.size(); ++t) {
            double term = coefs[t];
            const std::vector<unsigned>& e = exps[t];
            for (std::size_t l = 0; l < e.size(); ++l)
                if (e[l]) term *= ipow(x[l], e[l]);
            const double y = term - comp;
            const double v = sum + y;
            comp = (v - sum) - y;
            sum = v;
        }
        return sum;
    }
};

struct CachedBasis {
    PhiBasis basis;
    std::vector<CompiledPoly> compiled;
};

const CachedBasis& phi_basis_cached(int n, unsigned s) {
    static std::mutex mutex;
    static std::map<std::pair<int, unsigned>, CachedBasis> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, s});
    if (it != cache.end()) return it->second;

    CachedBasis cb;
    cb.basis = build_phi_basis(n, s);
    cb.compiled.reserve(cb.basis.elements.size());
    for (const PhiElement& el : cb.basis.elements) {
        CompiledPoly cp;
        cp.degree = el.f.degree();
        const double scale = el.f.poly().max_abs_coefficient();
        for (const auto& [e, c] : el.f.poly().terms()) {
            cp.exps.push_back(e);
            cp.coefs.push_back(to_double(c) / scale);
        }
        cb.compiled.push_back(std::move(cp));
    }
    return cache.emplace(std::make_pair(n, s), std::move(cb)).first->second;
}

}  // namespace

DesignReport verify_design_harmonic(const WeightedPointSet& x, int t, double tol, Exec exec,
                                    int t_max_probe) {
    if (t < 0) throw std::invalid_argument("verify_design_harmonic: strength must be >= 0");
    const int probe = t_max_probe < t ? t + 2 : t_max_probe;
    const int n = x.dim();

    // norm_pow_sum[k] = sum_i w_i ||x_i||^k, the residual scale per job.
    std::vector<double> norm_pow_sum(probe + 1, 0.0);
    for (int k = 0; k <= probe; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i)
            s += x.weight(i) * ipow(x.norm(i), static_cast<unsigned>(k));
        norm_pow_sum[k] = s;
    }

    struct Job {
        int s1;
        unsigned s;
        std::size_t elem;
    };
    std::vector<Job> jobs;
    std::vector<const CachedBasis*> basis_of_degree(probe + 1, nullptr);
    for (unsigned s = 1; s <= static_cast<unsigned>(probe); ++s)
        basis_of_degree[s] = &phi_basis_cached(n, s);
    for (int s1 = 0; 2 * s1 + 1 <= probe; ++s1)
        for (unsigned s = 1; 2 * s1 + static_cast<int>(s) <= probe; ++s)
            for (std::size_t e = 0; e < basis_of_degree[s]->compiled.size(); ++e)
                jobs.push_back({s1, s, e});

    std::vector<double> residual(jobs.size());
    for_each_index(jobs.size(), exec, [&](std::size_t j) {
        const Job& job = jobs[j];
        const CompiledPoly& f = basis_of_degree[job.s]->compiled[job.elem];
        double sum = 0.0, comp = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double term =
                x.weight(i) * ipow(x.norm(i), 2 * static_cast<unsigned>(job.s1)) *
                f.eval(x.point(i));
            const double y = term - comp;
            const double v = sum + y;
            comp = (v - sum) - y;
            sum = v;
        }
        const double scale = norm_pow_sum[2 * job.s1 + static_cast<int>(job.s)];
        residual[j] = std::abs(sum) / scale;
    });

    DesignReport report;
    report.method = "harmonic";
    report.requested_strength = t;
    report.tolerance = tol;
    report.antipodal = is_antipodal(x, tol);

    std::vector<ResidualRow> rows(probe + 1);
    for (int d = 0; d <= probe; ++d) rows[d].degree = d;
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        const int d = 2 * jobs[j].s1 + static_cast<int>(jobs[j].s);
        if (residual[j] >= rows[d].worst) {
            const PhiElement& el = basis_of_degree[jobs[j].s]->basis.elements[jobs[j].elem];
            rows[d].worst = residual[j];
            std::ostringstream os;
            os << "s1=" << jobs[j].s1 << " " << chain_label(el.m, el.mu);
            rows[d].worst_item = os.str();
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

// ---------------------------------------------------------------------------
// Fully symmetric designs

bool is_fully_symmetric(const LayeredDesign& ld, double tol) {
    const WeightedPointSet& x = ld.base;
    const int n = x.dim();

    // constant weight per layer
    for (std::size_t l = 0; l < ld.layer_count(); ++l) {
        double lo = 0.0, hi = 0.0;
        bool first = true;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (ld.layer_of[i] != l) continue;
            const double w = x.weight(i);
            lo = first ? w : std::min(lo, w);
            hi = first ? w : std::max(hi, w);
            first = false;
        }
        if (hi - lo > tol * hi) return false;
    }

    // closure under the generators of the hyperoctahedral group
    auto find_point = [&](const std::vector<double>& q, double ref_norm) -> bool {
        for (std::size_t i = 0; i < x.size(); ++i) {
            double distsq = 0.0;
            for (int l = 0; l < n; ++l) {
                const double d = x.point(i)[l] - q[l];
                distsq += d * d;
            }
            if (std::sqrt(distsq) <= tol * ref_norm) return true;
        }
        return false;
    };
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<double> q = x.point(i);
        q[0] = -q[0];
        if (!find_point(q, x.norm(i))) return false;
        for (int l = 0; l + 1 < n; ++l) {
            q = x.point(i);
            std::swap(q[l], q[l + 1]);
            if (!find_point(q, x.norm(i))) return false;
        }
    }
    return true;
}

FullySymmetricReport fully_symmetric_check(const LayeredDesign& ld, int t, double tol) {
    if (t != 3 && t != 5 && t != 7)
        throw std::invalid_argument("fully_symmetric_check: t must be one of {3,5,7}");
    if (!is_fully_symmetric(ld, tol))
        throw std::invalid_argument("fully_symmetric_check: input is not fully symmetric");
    const WeightedPointSet& x = ld.base;
    const int n = x.dim();
    if (t == 7 && n < 3)
        throw std::invalid_argument("fully_symmetric_check: t=7 reduction needs dimension >= 3");

    FullySymmetricReport report;
    report.t = t;
    report.pass = true;
    if (t == 3) return report;

    std::vector<double> scale(8, 0.0);
    for (int k = 4; k <= 6; k += 2)
        for (std::size_t i = 0; i < x.size(); ++i)
            scale[k] += x.weight(i) * ipow(x.norm(i), static_cast<unsigned>(k));

    const std::vector<int> idx2{1, 2}, idx3{1, 2, 3};
    const HarmonicPoly f42 = special_harmonics(n, SpecialHarmonic::f42, idx2);
    auto weighted_sum = [&](const HarmonicPoly& f, unsigned norm_pow) {
        double sum = 0.0, comp = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double term =
                x.weight(i) * ipow(x.norm(i), norm_pow) * f.poly().evaluate(x.point(i));
            const double y = term - comp;
            const double v = sum + y;
            comp = (v - sum) - y;
            sum = v;
        }
        return sum;
    };
    auto push = [&](int degree, const char* label, double sum, double sc) {
        const double rel = std::abs(sum) / sc;
        report.checks.push_back({degree, rel, label});
        report.max_residual = std::max(report.max_residual, rel);
        if (rel > tol) report.pass = false;
    };

    push(4, "f42", weighted_sum(f42, 0), scale[4]);
    if (t == 7) {
        const HarmonicPoly f63 = special_harmonics(n, SpecialHarmonic::f63, idx3);
        push(6, "f63", weighted_sum(f63, 0), scale[6]);
        push(6, "r^2*f42", weighted_sum(f42, 2), scale[6]);
    }
    return report;
}

}  // namespace tdesign

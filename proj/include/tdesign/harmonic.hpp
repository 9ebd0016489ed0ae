#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "tdesign/design.hpp"
#include "tdesign/rational.hpp"

namespace tdesign {

/// Sparse multivariate polynomial with exact rational coefficients, keyed by
/// exponent tuple.  Deterministic term order (lexicographic on exponents).
class RationalPoly {
  public:
    using TermMap = std::map<std::vector<unsigned>, Rational>;

    explicit RationalPoly(int nvars) : nvars_(nvars) {}
    static RationalPoly monomial(int nvars, std::vector<unsigned> exps, Rational coeff);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const std::vector<unsigned>& exps, const Rational& coeff);
    RationalPoly& operator+=(const RationalPoly& other);
    RationalPoly& operator*=(const Rational& c);
    friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);

    /// Sum of second partials, exact.
    RationalPoly laplacian() const;

    /// Total degree if every term has the same one; -1 for inhomogeneous,
    /// 0 for the zero polynomial.
    long long homogeneous_degree() const;

    /// Clear denominators and divide by the coefficient gcd; flips sign so the
    /// lexicographically largest term is positive.
    void normalize_integer();

    double max_abs_coefficient() const;

    double evaluate(std::span<const double> x) const;
    Rational evaluate_exact(std::span<const int> x) const;

  private:
    int nvars_;
    TermMap terms_;
};

/// Homogeneous polynomial certified harmonic (exact Laplacian = 0).
class HarmonicPoly {
  public:
    /// Gate: throws std::logic_error unless p is homogeneous and Delta p == 0
    /// exactly in rational arithmetic.
    static HarmonicPoly checked(RationalPoly p, const std::string& context = "");

    const RationalPoly& poly() const { return poly_; }
    int dim() const { return poly_.nvars(); }
    unsigned degree() const { return degree_; }

  private:
    HarmonicPoly(RationalPoly p, unsigned degree) : poly_(std::move(p)), degree_(degree) {}
    RationalPoly poly_;
    unsigned degree_;
};

/// One element of the Phi basis with its index tuple
/// (m_0 = s >= m_1 >= ... >= m_{n-2} >= 0, mu in {1,2}).
struct PhiElement {
    std::vector<unsigned> m;
    unsigned mu = 1;
    HarmonicPoly f;
};

struct PhiBasis {
    int n = 0;
    unsigned s = 0;
    std::vector<PhiElement> elements;
};

/// dim Harm_s(R^n) = binom(n+s-1, n-1) - binom(n+s-3, n-1).
long long dim_harm(int n, long long s);

/// The explicit harmonic basis of Harm_s(R^n): products of Gegenbauer factors
/// g_k = r_k^{m_k - m_{k+1}} C^{lambda_k}_{m_k - m_{k+1}}(x_{k+1}/r_k) with
/// lambda_k = m_{k+1} + (n-k-2)/2, times Re/Im (x_{n-1} + i x_n)^{m_{n-2}},
/// expanded to exact integer-scaled coefficients.  Every element passes the
/// exact Laplacian gate; the element count is checked against dim_harm.
PhiBasis build_phi_basis(int n, unsigned s);

/// The fully even sub-basis: elements with every m_k even and mu = 1.
PhiBasis feven_filter(const PhiBasis& basis);

enum class SpecialHarmonic { f2, f42, f62, f63 };

/// The named two/three-variable harmonics used by the fully symmetric checks,
/// placed on the given (1-based, distinct) variable indices of R^n:
///   f2  = x_i^2 - x_j^2                          (1 index: i, uses i+1)
///   f42 = x_i^4 - 6 x_i^2 x_j^2 + x_j^4
///   f62 = x_i^6 - 15 x_i^4 x_j^2 + 15 x_i^2 x_j^4 - x_j^6
///   f63 = 2 sum x^6 - 15 sum_pairs x^4 y^2 + 180 x_i^2 x_j^2 x_k^2
HarmonicPoly special_harmonics(int n, SpecialHarmonic name, std::span<const int> indices);

/// Closed form of S(f) = sum over the lattice shell I^n_k of f, for f42/f63.
long long shell_harmonic_sum(int n, int k, SpecialHarmonic name);

/// Harmonic-criterion verifier: sum_x w(x) ||x||^{2 s1} f(x) must vanish for
/// all 0 <= 2 s1 <= t and f in Phi_s^n, 1 <= s <= t - 2 s1.  Parallelizes
/// over (s1, f) pairs with one residual slot per pair, so serial and OpenMP
/// runs agree bit for bit.
DesignReport verify_design_harmonic(const WeightedPointSet& x, int t, double tol = 1e-9,
                                    Exec exec = Exec::openmp, int t_max_probe = -1);

struct FullySymmetricReport {
    int t = 0;
    bool pass = false;
    double max_residual = 0.0;
    std::vector<ResidualRow> checks;
};

/// Reduced verification for fully symmetric designs with per-layer constant
/// weights (Corollary-style): t=3 holds automatically; t=5 needs the f42 sum
/// to vanish; t=7 additionally the f63 and ||x||^2 f42 sums.  Throws on
/// input that is not fully symmetric or t outside {3,5,7}.
FullySymmetricReport fully_symmetric_check(const LayeredDesign& ld, int t, double tol = 1e-9);

/// True iff the set is closed under coordinate permutations and sign flips
/// with matching weights (and weights constant on each layer).
bool is_fully_symmetric(const LayeredDesign& ld, double tol = 1e-9);

}  // namespace tdesign

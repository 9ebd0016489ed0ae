#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tdesign/parallel.hpp"

namespace tdesign {

/// Finite weighted point configuration in R^n.  Points at the origin are
/// rejected outright (the design definition excludes 0), as are non-positive
/// weights.
class WeightedPointSet {
  public:
    WeightedPointSet(int dim, std::vector<std::vector<double>> points,
                     std::vector<double> weights);

    int dim() const { return dim_; }
    std::size_t size() const { return points_.size(); }
    const std::vector<double>& point(std::size_t i) const { return points_[i]; }
    const std::vector<std::vector<double>>& points() const { return points_; }
    double weight(std::size_t i) const { return weights_[i]; }
    const std::vector<double>& weights() const { return weights_; }
    double norm(std::size_t i) const { return norms_[i]; }
    double total_weight() const;

  private:
    int dim_;
    std::vector<std::vector<double>> points_;
    std::vector<double> weights_;
    std::vector<double> norms_;
};

/// Point set split into norm layers X_r with per-layer mass W_r.
struct LayeredDesign {
    WeightedPointSet base;
    std::vector<double> radii;        // sorted distinct layer radii
    std::vector<std::size_t> layer_of;  // point index -> layer index
    std::vector<double> layer_mass;   // W_r
    std::vector<std::size_t> layer_size;

    std::size_t layer_count() const { return radii.size(); }
};

/// Group points whose norms agree within `group_tol` (relative) into layers.
LayeredDesign layer_decompose(const WeightedPointSet& x, double group_tol = 1e-9);

enum class Tightness { tight, not_tight, inapplicable };

struct ResidualRow {
    int degree = 0;
    double worst = 0.0;       // scale-relative residual
    std::string worst_item;   // monomial / harmonic label attaining it
};

struct DesignReport {
    std::string method;           // "moments" or "harmonic"
    int requested_strength = 0;
    bool pass = false;
    int verified_strength = -1;   // largest t' <= probe passing every check
    double max_residual = 0.0;    // over checks of degree <= requested
    double tolerance = 0.0;
    bool antipodal = false;
    std::vector<ResidualRow> residuals;  // one row per total degree <= probe
    std::optional<Tightness> tight;
};

/// Definition-2 moment verifier: for every monomial of total degree <= t,
/// compare sum_r W_r * (exact sphere average) against sum_x w(x) x^alpha.
/// Also probes up to `t_max_probe` (default t+2) for bonus strength.
/// Work is distributed over monomials; each residual slot is written by
/// exactly one item, so serial and OpenMP runs produce identical tables.
DesignReport verify_euclidean_design(const WeightedPointSet& x, int t, double tol = 1e-9,
                                     Exec exec = Exec::openmp, int t_max_probe = -1);

/// Fisher-type lower bound N(n,p,t) = sum_{k=1..p} N_k with
/// N_k = d(floor(t/2)+2-2k) + d(floor((t-1)/2)+2-2k); for odd t the bound
/// assumes an antipodal design.
struct FisherBound {
    int n = 0, p = 0, t = 0;
    std::vector<long long> per_k;
    long long total = 0;
    bool antipodality_required = false;
};

FisherBound fisher_bound(int n, int p, int t);

/// dim Hom_s(R^n) = binom(s+n-1, n-1); zero for s < 0 (Fisher-sum convention).
long long dim_hom(int n, long long s);

/// True iff the weighted set is fixed by x -> -x (matching weights) within tol.
bool is_antipodal(const WeightedPointSet& x, double tol = 1e-9);

/// Tightness verdict for a verified design: size == N(n, #layers, t).
/// For odd t the bound needs antipodality; without it the verdict is
/// `inapplicable` rather than a guess.
Tightness is_tight(const LayeredDesign& ld, int t, const DesignReport& report);

/// All exponent tuples of total degree <= t in n variables, degree-major then
/// lexicographic; the shared work list of the moment verifier.
std::vector<std::vector<unsigned>> monomials_up_to_degree(int n, int t);

}  // namespace tdesign

#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "vexspace/geometry.hpp"
#include "vexspace/report.hpp"

namespace vexspace {

/// Riemann zeta for s > 1 (direct sum + Euler-Maclaurin tail, ~1e-15).
double zeta_value(double s);
/// eta(s) = sum 1/((k+1) ln^s(k+1)), s > 1.
double eta_value(double s);

/// Gap lengths {a_k} with sum 1; remainders r_n = 1 - sum_{k<=n} a_k are
/// computed from the analytic tails (families) so they stay exact and
/// positive at depth.
class GapSequence {
  public:
    enum class Family { geometric, zeta, loglog, explicit_list };

    static GapSequence geometric(double a);       // a_k = a^{k-1}/(a+1)^k
    static GapSequence zeta(double s);            // a_k = k^{-s}/zeta(s)
    static GapSequence loglog(double s);          // a_k = 1/(eta(s) (k+1) ln^s(k+1))
    static GapSequence explicit_terms(std::vector<double> terms);

    Family family() const;
    double param() const;
    double term(int k) const;      // a_k, k >= 1
    double remainder(int n) const; // r_n, n >= 0
    double eps(int n) const;       // 2^{-n} r_n
    /// Partial sum of the first `terms` gaps plus the analytic tail
    /// (families) -- equals 1 up to roundoff, used by the sum invariant.
    double sum_check(int terms) const;
    int max_terms() const; // explicit lists only; INT_MAX for families

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

/// Stage K_n: 2^n sorted disjoint closed intervals in [0,1].
struct CantorStage {
    int n = 0;
    double r_n = 1.0;
    double eps_n = 1.0;
    std::vector<double> endpoints; // 2^{n+1} sorted; interval i = [2i, 2i+1]
    std::size_t interval_count() const { return endpoints.size() / 2; }
};

CantorStage build_stage(const GapSequence& gaps, int n);

struct NeighborhoodMeasure {
    double t = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    bool exact = false; // upper - lower <= 1e-14
};

/// Certified bounds for phi(t) = |K(t) ∩ Omega| from stage n: lower from
/// endpoint balls, upper from dilated stage intervals; exact sorted-union
/// sweep arithmetic. Exact whenever t >= eps_n/2.
NeighborhoodMeasure neighborhood_measure(const CantorStage& stage, double t, const Domain& omega);

/// Same bounds in O(n) from the gap structure (no interval materialization);
/// agrees with the sweep bit-for-bit up to rounding, usable at any depth.
NeighborhoodMeasure phi_bounds(const GapSequence& gaps, int n, double t, const Domain& omega);

/// Smallest n with eps_n <= 2t (the exact-regime stage for radius t).
int auto_stage(const GapSequence& gaps, double t);

/// Exact phi(t) via the auto stage (bounds coincide).
double phi_exact(const GapSequence& gaps, double t, const Domain& omega);

double product_upper_bound(double phi_value, int N);

struct DistanceResult {
    double value = 0.0;       // distance to the nearest stage endpoint (>= d_K)
    double error_bound = 0.0; // eps_n / 2
};
DistanceResult distance_to_set(const CantorStage& stage, double x);

struct AsymptoticsRow {
    double t = 0.0;
    double lower = 0.0, upper = 0.0;
    double envelope_lower = 0.0, envelope_upper = 0.0;
};

struct AsymptoticsReport {
    Report report;
    double exponent = 0.0;    // family decay exponent (geometric: Lemma constant)
    double slope = 0.0;       // log-log regression slope of exact phi
    double c1 = 0.0, c2 = 0.0; // fitted envelope constants (zeta/loglog)
    double b = 0.0;            // fitted inner scale (loglog family)
    std::vector<AsymptoticsRow> rows;
};

/// Family envelope verification on a decreasing t grid. Geometric asserts
/// the proof constants q t^s <= phi <= (4/q) t^s; zeta/loglog fit and report
/// band constants and assert the band stays within a factor 10.
AsymptoticsReport verify_asymptotics(const GapSequence& gaps, const std::vector<double>& t_grid,
                                     const Domain& omega);

} // namespace vexspace

#pragma once

#include <utility>
#include <vector>

#include "vexspace/grid.hpp"
#include "vexspace/report.hpp"

namespace vexspace {

/// Non-increasing step profile on [0, |Omega|] equimeasurable with |u|.
struct StepRearrangement {
    std::vector<double> breaks; // breaks.front() = 0, breaks.back() = |Omega|
    std::vector<double> values; // one per interval, non-increasing (may hold +inf)

    double total() const { return breaks.empty() ? 0.0 : breaks.back(); }
    /// Right-continuous evaluation; 0 for t >= total().
    double value_at(double t) const;
    /// sum alpha^{v_j} * (t_j - t_{j-1}); +inf on overflow or +inf values.
    double integral_of_exp(double alpha) const;
};

/// Exact rearrangement of the piecewise-constant representative: cells
/// sorted by |value| descending (stable by cell index on ties).
StepRearrangement rearrange(const GridFunction& u);

/// Compare two non-increasing step functions as functions: walks the merged
/// (value, measure) profiles; returns the total measure where values differ
/// by more than value_tol.
double step_mismatch_measure(const StepRearrangement& a, const StepRearrangement& b,
                             double value_tol);

/// Lemma: (alpha^{s(.)})^*(t) = alpha^{s^*(t)} exactly on step representatives.
Report check_exp_commutes(const GridFunction& s, double alpha);

/// Restricted rearrangement identity (g chi_E)^* = g^* chi_{(0,|E|)} under
/// the hypothesis inf_E g >= sup_{complement} g; skips with a diagnostic
/// when the hypothesis fails.
Report check_restricted_rearrangement(const GridFunction& g,
                                      const std::vector<std::size_t>& E);

/// Both sides of the equimeasurable identity
/// int alpha^{s(x)} dx = int_0^{|Omega|} alpha^{s^*(t)} dt.
std::pair<double, double> equimeasurable_integral(const GridFunction& s, double alpha);

} // namespace vexspace

#pragma once

#include <optional>

#include "vexspace/exponent.hpp"
#include "vexspace/grid.hpp"
#include "vexspace/report.hpp"

namespace vexspace {

struct ModularValue {
    double value = 0.0;
    double quadrature_error = 0.0;
};

struct NormValue {
    double value = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
};

/// m_{p(.)}(u) = sum |u|^{p} * cell measure, with an error estimate from one
/// dyadic refinement step (zero for piecewise-constant data without sampler).
ModularValue modular(const GridFunction& u, const ExponentField& p);

/// Raw modular of the step representative u/lambda on pre-sampled exponents.
double modular_scaled(std::span<const double> values, std::span<const double> pvals,
                      std::span<const double> measures, double lambda);

/// Luxemburg norm inf{lambda > 0 : m(u/lambda) <= 1} by geometric bracketing
/// then bisection; u = 0 returns 0 without bisection.
NormValue luxemburg_norm(const GridFunction& u, const ExponentField& p, double tol = 1e-11);

/// The four norm-vs-modular inequalities, sides chosen by whether the
/// modular is <= 1 or >= 1.
Report check_norm_modular_bounds(const GridFunction& u, const ExponentField& q);

/// ||u||_p^{q+} <= || |u|^{q} ||_{r} <= ||u||_p^{q-} for ||u||_p <= 1, r = p/q.
Report check_power_bridge(const GridFunction& u, const ExponentField& p, const ExponentField& q);

/// 0 <= u_n increasing a.e. implies the norms increase to the norm of the
/// last element; non-monotone input is an error.
Report check_fatou(const std::vector<GridFunction>& ascending, const ExponentField& p,
                   double tol = 1e-6);

} // namespace vexspace

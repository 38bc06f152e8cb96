#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vexspace/cantor.hpp"
#include "vexspace/geometry.hpp"

namespace vexspace {

/// Upper envelope for phi(t) = |K(t)|, in one of the forms the Cantor
/// families produce. eval(t) bounds phi(t) from above on the fitted range.
struct PhiEnvelope {
    enum class Form { power, log_pow, loglog_pow };
    Form form = Form::power;
    double exponent = 1.0; // sigma (power) or s (log forms)
    double C = 1.0;
    double b = 0.0; // loglog_pow inner scale
    std::string provenance;

    double eval(double t) const;
};

/// A compact null obstruction set K: finitely many points or a generalized
/// Cantor set, optionally embedded as K x {0} inside a 2D domain. Distances
/// are taken to stage endpoints (never below the true d_K); phi queries
/// reduce to the exact regime of a finite stage.
class ObstructionSet {
  public:
    static ObstructionSet points(std::vector<double> pts);
    static ObstructionSet cantor(const GapSequence& gaps, int distance_stage);
    static ObstructionSet embedded_slab(ObstructionSet base); // K x {0} in R^2

    int ambient_dim() const;
    bool is_embedded() const;
    bool is_cantor() const;
    const GapSequence& gaps() const; // cantor only

    /// Distance to the endpoint skeleton: >= d_K(x), over by <= distance_error().
    double distance_upper(const Point& x) const;
    double distance_error() const;

    /// phi(t) of the 1D base set within omega1d (exact regime).
    double phi(double t, const Domain& omega1d) const;

    /// Fitted/analytic upper envelope over [t_lo, t_hi], scan-verified.
    /// Embedded sets get the slab bound phi_2(t) <= 2t phi_1(t) folded in
    /// (power form only).
    PhiEnvelope make_envelope(const Domain& omega1d, double t_lo, double t_hi,
                              int scan = 48) const;

    /// Points to refine quadrature toward (full ambient-dim points).
    std::vector<Point> refinement_hints(int max_points = 4096) const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

} // namespace vexspace

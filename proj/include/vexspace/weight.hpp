#pragma once

#include <string>

#include "vexspace/report.hpp"

namespace vexspace {

/// Decreasing continuous weight omega on [0, diam], built as
///   omega(t) = LN(scale/t) / psi(scale/t)
/// where LN is ln / lnln / lnlnln per Form and psi is a preset satisfying
/// the matching hypotheses (psi/LN decreasing, psi -> infinity). The scale
/// keeps LN positive up to t = diam. omega^{-1} is evaluated by bisection
/// in L = ln(scale/t) to 1e-12, which stays stable when t underflows.
class WeightSpec {
  public:
    enum class Form { log_psi, loglog_psi, logloglog_psi };
    enum class Psi { sqrt_log, log_pow, loglog, sqrt_loglog, sqrt_logloglog };

    static WeightSpec make(Form form, Psi psi, double c, double scale, double diam,
                           double psi_param = 0.5);
    static Form form_from_name(const std::string&);
    static Psi psi_from_name(const std::string&);

    double omega(double t) const;
    double omega0() const; // omega(diam)
    /// L = ln(scale/t) solving omega(t) = y, for y >= omega0().
    double omega_inv_log(double y) const;
    double omega_inv(double y) const; // scale * exp(-omega_inv_log(y)); may underflow
    /// psi evaluated at tau with ln(tau) = L.
    double psi_of_log(double L) const;

    /// The analytic tail-exponent multiplier kappa for a phi-envelope whose
    /// form matches this weight: power envelopes pair with log_psi
    /// (kappa = sigma), log/loglog envelopes with the deeper forms
    /// (kappa = s_env - 1).
    double kappa(double envelope_exponent) const;

    /// Grid verification of the preset hypotheses (Example conditions):
    /// omega strictly decreasing, psi/LN decreasing, psi unbounded trend.
    Report check_hypotheses(int grid = 64) const;

    Form form() const { return form_; }
    Psi psi() const { return psi_; }
    double c() const { return c_; }
    double scale() const { return scale_; }
    double diam() const { return diam_; }
    double psi_param() const { return psi_param_; }
    std::string describe() const;

  private:
    double ln_part(double L) const;  // LN value given L = ln(scale/t)
    Form form_ = Form::log_psi;
    Psi psi_ = Psi::sqrt_log;
    double c_ = 1.0;
    double scale_ = 1.0;
    double diam_ = 1.0;
    double psi_param_ = 0.5;
};

} // namespace vexspace

#include "vexspace/weight.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace vexspace {

namespace {
double safe_log(double x) { return x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity(); }
} // namespace

WeightSpec WeightSpec::make(Form form, Psi psi, double c, double scale, double diam,
                            double psi_param) {
    if (!(c > 0.0)) throw std::invalid_argument("WeightSpec: c > 0 required");
    if (!(diam > 0.0)) throw std::invalid_argument("WeightSpec: diam > 0 required");
    if (!(scale >= diam)) throw std::invalid_argument("WeightSpec: scale >= diam required");
    WeightSpec w;
    w.form_ = form;
    w.psi_ = psi;
    w.c_ = c;
    w.scale_ = scale;
    w.diam_ = diam;
    w.psi_param_ = psi_param;
    // positivity of the nested logs up to t = diam
    const double L0 = std::log(scale / diam);
    if (form == Form::loglog_psi && !(L0 > 1.0))
        throw std::invalid_argument("WeightSpec: loglog form needs scale > e*diam");
    if (form == Form::logloglog_psi && !(std::log(L0) > 1.0))
        throw std::invalid_argument("WeightSpec: logloglog form needs scale > e^e*diam");
    if (psi == Psi::log_pow && !(psi_param > 0.0 && psi_param < 1.0))
        throw std::invalid_argument("WeightSpec: log_pow exponent must lie in (0,1)");
    return w;
}

WeightSpec::Form WeightSpec::form_from_name(const std::string& s) {
    if (s == "log_psi") return Form::log_psi;
    if (s == "loglog_psi") return Form::loglog_psi;
    if (s == "logloglog_psi") return Form::logloglog_psi;
    throw std::invalid_argument("WeightSpec: unknown form '" + s + "'");
}

WeightSpec::Psi WeightSpec::psi_from_name(const std::string& s) {
    if (s == "sqrt_log") return Psi::sqrt_log;
    if (s == "log_pow") return Psi::log_pow;
    if (s == "loglog") return Psi::loglog;
    if (s == "sqrt_loglog") return Psi::sqrt_loglog;
    if (s == "sqrt_logloglog") return Psi::sqrt_logloglog;
    throw std::invalid_argument("WeightSpec: unknown psi preset '" + s + "'");
}

double WeightSpec::ln_part(double L) const {
    switch (form_) {
        case Form::log_psi: return L;
        case Form::loglog_psi: return safe_log(L);
        case Form::logloglog_psi: return safe_log(safe_log(L));
    }
    return L;
}

double WeightSpec::psi_of_log(double L) const {
    switch (psi_) {
        case Psi::sqrt_log: return std::sqrt(std::max(L, 0.0));
        case Psi::log_pow: return std::pow(std::max(L, 0.0), psi_param_);
        case Psi::loglog: return safe_log(L);
        case Psi::sqrt_loglog: return std::sqrt(std::max(safe_log(L), 0.0));
        case Psi::sqrt_logloglog: return std::sqrt(std::max(safe_log(safe_log(L)), 0.0));
    }
    return 1.0;
}

double WeightSpec::omega(double t) const {
    if (!(t >= 0.0)) throw std::invalid_argument("WeightSpec::omega: t >= 0 required");
    if (t == 0.0) return std::numeric_limits<double>::infinity();
    const double L = std::log(scale_ / t);
    const double num = ln_part(L);
    if (num <= 0.0) return 0.0;
    const double den = psi_of_log(L);
    if (den <= 0.0) return std::numeric_limits<double>::infinity();
    return num / den;
}

double WeightSpec::omega0() const { return omega(diam_); }

double WeightSpec::omega_inv_log(double y) const {
    const double L0 = std::log(scale_ / diam_);
    auto value = [&](double L) {
        const double num = ln_part(L);
        const double den = psi_of_log(L);
        if (num <= 0.0) return 0.0;
        if (den <= 0.0) return std::numeric_limits<double>::infinity();
        return num / den;
    };
    if (y <= value(L0)) return L0;
    double lo = L0, hi = std::max(L0, 1.0) + 1.0;
    int guard = 0;
    while (value(hi) < y) {
        hi *= 2.0;
        if (++guard > 200) throw std::domain_error("WeightSpec: omega_inv bracketing failed");
    }
    while (hi - lo > 1e-12 * std::max(1.0, hi)) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (value(mid) < y) lo = mid;
        else hi = mid;
    }
    return 0.5 * (lo + hi);
}

double WeightSpec::omega_inv(double y) const {
    return scale_ * std::exp(-omega_inv_log(y));
}

double WeightSpec::kappa(double envelope_exponent) const {
    switch (form_) {
        case Form::log_psi: return envelope_exponent;           // phi <= C t^sigma
        case Form::loglog_psi: return envelope_exponent - 1.0;  // phi <= C ln^{1-s}
        case Form::logloglog_psi: return envelope_exponent - 1.0;
    }
    return envelope_exponent;
}

Report WeightSpec::check_hypotheses(int grid) const {
    Report rep;
    rep.name = "weight_hypotheses";
    const double L0 = std::log(scale_ / diam_);
    const double Lmax = std::max(L0 + 1.0, 256.0);
    // log-spaced L grid
    std::vector<double> Ls(grid);
    for (int i = 0; i < grid; ++i) {
        const double f = double(i) / (grid - 1);
        Ls[i] = L0 + (std::exp(f * std::log(1.0 + Lmax - L0)) - 1.0);
    }
    bool ratio_dec = true, psi_up = true;
    double prev_ratio = std::numeric_limits<double>::infinity();
    double prev_psi = -1.0;
    for (double L : Ls) {
        const double ps = psi_of_log(L);
        const double lnp = ln_part(L);
        const double ratio = lnp > 0.0 ? ps / lnp : std::numeric_limits<double>::infinity();
        if (ratio > prev_ratio + 1e-12) ratio_dec = false; // psi/LN decreasing in tau
        if (ps < prev_psi - 1e-12) psi_up = false;
        prev_ratio = ratio;
        prev_psi = ps;
    }
    // omega decreasing in t == strictly increasing along L
    bool strict = true;
    for (std::size_t i = 1; i < Ls.size(); ++i) {
        const double a = omega(scale_ * std::exp(-Ls[i - 1]));
        const double b = omega(scale_ * std::exp(-Ls[i]));
        if (!(b > a)) strict = false;
    }
    const double tail_psi = psi_of_log(Ls.back());
    rep.add("omega strictly decreasing", 0.0, 0.0, 0.0, strict);
    rep.add("psi/ln-part decreasing", 0.0, 0.0, 0.0, ratio_dec);
    rep.add("psi nondecreasing and unbounded trend", psi_of_log(Ls.front()), tail_psi,
            tail_psi - psi_of_log(Ls.front()), psi_up && tail_psi > 2.0 * std::max(psi_of_log(Ls.front()), 0.5));
    rep.metrics["omega0"] = omega0();
    rep.metrics["psi_tail"] = tail_psi;
    return rep;
}

std::string WeightSpec::describe() const {
    std::string f = form_ == Form::log_psi ? "ln" : form_ == Form::loglog_psi ? "lnln" : "lnlnln";
    std::string p;
    switch (psi_) {
        case Psi::sqrt_log: p = "sqrt_log"; break;
        case Psi::log_pow: p = "log_pow"; break;
        case Psi::loglog: p = "loglog"; break;
        case Psi::sqrt_loglog: p = "sqrt_loglog"; break;
        case Psi::sqrt_logloglog: p = "sqrt_logloglog"; break;
    }
    return "omega(t) = " + f + "(scale/t)/psi(scale/t), psi = " + p;
}

} // namespace vexspace

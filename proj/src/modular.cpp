#include "vexspace/modular.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vexspace {

namespace {

std::vector<double> sample_exponent(const GridFunction& u, const ExponentField& p) {
    const Partition& part = u.partition();
    std::vector<double> pv(part.size());
    for (std::size_t i = 0; i < part.size(); ++i) pv[i] = p(part.cell(i).center);
    return pv;
}

// |v|^{pexp} computed through exp/log with overflow/underflow guards.
double pow_abs(double v, double pexp) {
    const double a = std::abs(v);
    if (a == 0.0) return 0.0;
    if (pexp == kInf) return a > 1.0 ? kInf : (a == 1.0 ? 1.0 : 0.0);
    const double e = pexp * std::log(a);
    if (e > 709.0) return kInf;
    if (e < -745.0) return 0.0;
    return std::exp(e);
}

double modular_raw(std::span<const double> values, std::span<const double> pvals,
                   std::span<const double> measures) {
    double s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double term = pow_abs(values[i], pvals[i]);
        if (term == kInf) return kInf;
        s += term * measures[i];
    }
    return s;
}

std::vector<double> measures_of(const Partition& part) {
    std::vector<double> m(part.size());
    for (std::size_t i = 0; i < part.size(); ++i) m[i] = part.cell(i).measure;
    return m;
}

} // namespace

double modular_scaled(std::span<const double> values, std::span<const double> pvals,
                      std::span<const double> measures, double lambda) {
    double s = 0.0;
    const double loglam = std::log(lambda);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double a = std::abs(values[i]);
        if (a == 0.0) continue;
        double term;
        if (pvals[i] == kInf) {
            term = (a > lambda) ? kInf : 0.0;
        } else {
            const double e = pvals[i] * (std::log(a) - loglam);
            term = e > 709.0 ? kInf : (e < -745.0 ? 0.0 : std::exp(e));
        }
        if (term == kInf) return kInf;
        s += term * measures[i];
    }
    return s;
}

ModularValue modular(const GridFunction& u, const ExponentField& p) {
    for (double v : u.values())
        if (!std::isfinite(v)) throw std::invalid_argument("modular: non-finite sample value");
    const auto pv = sample_exponent(u, p);
    const auto ms = measures_of(u.partition());
    const double coarse = modular_raw(u.values(), pv, ms);

    double err = 0.0;
    if (u.has_sampler() && u.partition().kind() == Partition::Kind::box_grid) {
        const GridFunction ur = u.refined();
        const auto pvr = sample_exponent(ur, p);
        const auto msr = measures_of(ur.partition());
        const double fine = modular_raw(ur.values(), pvr, msr);
        err = std::abs(fine - coarse);
    }
    return {coarse, err};
}

NormValue luxemburg_norm(const GridFunction& u, const ExponentField& p, double tol) {
    if (!(u.total_measure() > 0.0)) throw std::domain_error("luxemburg_norm: zero-measure domain");
    double vmax = 0.0;
    for (double v : u.values()) {
        if (!std::isfinite(v)) throw std::invalid_argument("luxemburg_norm: non-finite sample value");
        vmax = std::max(vmax, std::abs(v));
    }
    if (vmax == 0.0) return {0.0, 0.0, 0.0};

    const auto pv = sample_exponent(u, p);
    const auto ms = measures_of(u.partition());
    auto m = [&](double lam) { return modular_scaled(u.values(), pv, ms, lam); };

    // bracket: m is strictly decreasing in lambda for nonzero u
    double hi = vmax;
    for (int it = 0; m(hi) > 1.0; ++it) {
        hi *= 2.0;
        if (it > 4000) throw std::logic_error("luxemburg_norm: bracketing failed (hi)");
    }
    double lo = hi;
    while (m(lo) < 1.0) {
        lo *= 0.5;
        if (lo < 1e-300) break; // modular(u/lo) stays < 1 only for u = 0; guarded above
    }
    // invariant: m(hi) <= 1 <= m(lo)
    while ((hi - lo) > tol * std::max(hi, 1.0)) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        if (m(mid) <= 1.0) hi = mid;
        else lo = mid;
    }
    return {0.5 * (lo + hi), lo, hi};
}

Report check_norm_modular_bounds(const GridFunction& u, const ExponentField& q) {
    const ExponentBounds qb = q.bounds();
    if (!(qb.hi < kInf)) throw std::domain_error("check_norm_modular_bounds: q+ < inf required");
    Report rep;
    rep.name = "norm_modular_bounds";
    const double m = modular(u, q).value;
    const NormValue nv = luxemburg_norm(u, q);
    rep.metrics["modular"] = m;
    rep.metrics["norm"] = nv.value;
    rep.metrics["q_minus"] = qb.lo;
    rep.metrics["q_plus"] = qb.hi;
    const double guard = (nv.bracket_hi - nv.bracket_lo) + 1e-12;

    // all four inequalities, applicable side chosen by the modular
    if (m <= 1.0) {
        const double ub = std::pow(m, 1.0 / qb.hi);
        const double lb = std::pow(m, 1.0 / qb.lo);
        rep.add("norm <= m^{1/q+} (m<=1)", nv.value, ub, ub - nv.value, nv.bracket_lo <= ub + guard);
        rep.add("norm >= m^{1/q-} (m<=1)", nv.value, lb, nv.value - lb, nv.bracket_hi >= lb - guard);
    }
    if (m >= 1.0) {
        const double ub = std::pow(m, 1.0 / qb.lo);
        const double lb = std::pow(m, 1.0 / qb.hi);
        rep.add("norm <= m^{1/q-} (m>=1)", nv.value, ub, ub - nv.value, nv.bracket_lo <= ub + guard);
        rep.add("norm >= m^{1/q+} (m>=1)", nv.value, lb, nv.value - lb, nv.bracket_hi >= lb - guard);
    }
    return rep;
}

Report check_power_bridge(const GridFunction& u, const ExponentField& p, const ExponentField& q) {
    Report rep;
    rep.name = "power_bridge";
    const ExponentBounds pb = p.bounds();
    const ExponentBounds qb = q.bounds();
    if (!(pb.hi < kInf)) throw std::domain_error("check_power_bridge: p+ < inf required");
    const NormValue np = luxemburg_norm(u, p);
    rep.metrics["norm_p"] = np.value;
    rep.metrics["q_minus"] = qb.lo;
    rep.metrics["q_plus"] = qb.hi;
    if (np.bracket_lo > 1.0) {
        rep.skipped = true;
        rep.notes.push_back("precondition ||u||_p <= 1 violated; bridge not applicable");
        return rep;
    }
    const RatioFields rats = ratio_exponents(p, q);
    ExponentField qc = q;
    GridFunction uq = GridFunction(u.partition_ptr(), [&] {
        std::vector<double> v(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double qv = qc(u.partition().cell(i).center);
            v[i] = std::pow(std::abs(u.value(i)), qv);
        }
        return v;
    }());
    const NormValue mid = luxemburg_norm(uq, rats.r);
    rep.metrics["middle"] = mid.value;
    const double upper = std::pow(np.value, qb.lo);
    const double lower = std::pow(np.value, qb.hi);
    const double guard = (np.bracket_hi - np.bracket_lo) + (mid.bracket_hi - mid.bracket_lo) + 1e-12;
    rep.add("||u||_p^{q+} <= middle", lower, mid.value, mid.value - lower, mid.bracket_hi >= lower - guard);
    rep.add("middle <= ||u||_p^{q-}", mid.value, upper, upper - mid.value, mid.bracket_lo <= upper + guard);
    return rep;
}

Report check_fatou(const std::vector<GridFunction>& ascending, const ExponentField& p, double tol) {
    Report rep;
    rep.name = "fatou_monotone_norms";
    if (ascending.size() < 2) throw std::invalid_argument("check_fatou: need at least two functions");
    for (std::size_t k = 0; k + 1 < ascending.size(); ++k) {
        const GridFunction& a = ascending[k];
        const GridFunction& b = ascending[k + 1];
        if (a.partition_ptr() != b.partition_ptr())
            throw std::invalid_argument("check_fatou: shared partition required");
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a.value(i) < 0.0)
                throw std::invalid_argument("check_fatou: nonnegative input required");
            if (a.value(i) > b.value(i) + 1e-15)
                throw std::invalid_argument("check_fatou: input sequence is not pointwise nondecreasing");
        }
    }
    std::vector<double> norms;
    norms.reserve(ascending.size());
    for (const auto& u : ascending) norms.push_back(luxemburg_norm(u, p).value);
    bool mono = true;
    for (std::size_t k = 0; k + 1 < norms.size(); ++k)
        if (norms[k] > norms[k + 1] + 1e-12) mono = false;
    const double limit = norms.back();
    const double final_gap = norms.size() >= 2 ? limit - norms[norms.size() - 2] : 0.0;
    rep.metrics["limit_norm"] = limit;
    rep.metrics["final_gap"] = final_gap;
    rep.add("norms nondecreasing", norms.front(), norms.back(), norms.back() - norms.front(), mono);
    rep.add("norms converge to ||u_last||", final_gap, tol, tol - final_gap,
            std::abs(final_gap) <= tol * std::max(1.0, limit));
    return rep;
}

} // namespace vexspace

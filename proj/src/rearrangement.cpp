#include "vexspace/rearrangement.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace vexspace {

namespace {
constexpr double kInfV = std::numeric_limits<double>::infinity();

double exp_base(double alpha, double x) {
    if (x == kInfV) return kInfV;
    const double e = x * std::log(alpha);
    if (e > 709.0) return kInfV;
    if (e < -745.0) return 0.0;
    return std::exp(e);
}
} // namespace

double StepRearrangement::value_at(double t) const {
    if (breaks.empty() || t >= breaks.back()) return 0.0;
    if (t < 0.0) throw std::invalid_argument("StepRearrangement: t >= 0 required");
    auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
    const std::size_t idx = static_cast<std::size_t>(it - breaks.begin());
    return values[std::min(idx == 0 ? 0 : idx - 1, values.size() - 1)];
}

double StepRearrangement::integral_of_exp(double alpha) const {
    double s = 0.0;
    for (std::size_t j = 0; j < values.size(); ++j) {
        const double term = exp_base(alpha, values[j]);
        if (term == kInfV) return kInfV;
        s += term * (breaks[j + 1] - breaks[j]);
    }
    return s;
}

StepRearrangement rearrange(const GridFunction& u) {
    const std::size_t n = u.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(u.value(a)) > std::abs(u.value(b));
    });
    StepRearrangement r;
    r.breaks.reserve(n + 1);
    r.values.reserve(n);
    r.breaks.push_back(0.0);
    double acc = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = order[k];
        const double v = std::abs(u.value(i));
        acc += u.partition().cell(i).measure;
        if (!r.values.empty() && r.values.back() == v) {
            r.breaks.back() = acc; // merge equal-valued steps
        } else {
            r.values.push_back(v);
            r.breaks.push_back(acc);
        }
    }
    return r;
}

double step_mismatch_measure(const StepRearrangement& a, const StepRearrangement& b,
                             double value_tol) {
    // walk the two (value, measure) profiles in lockstep; both are sorted
    // non-increasing so equality as functions == equality of profiles
    std::size_t ia = 0, ib = 0;
    double ra = ia < a.values.size() ? a.breaks[1] - a.breaks[0] : 0.0;
    double rb = ib < b.values.size() ? b.breaks[1] - b.breaks[0] : 0.0;
    double mismatch = 0.0;
    const double total = std::max(a.total(), b.total());
    double consumed = 0.0;
    while (consumed < total - 1e-15) {
        const double va = ia < a.values.size() ? a.values[ia] : 0.0;
        const double vb = ib < b.values.size() ? b.values[ib] : 0.0;
        double chunk;
        if (ia >= a.values.size()) chunk = rb;
        else if (ib >= b.values.size()) chunk = ra;
        else chunk = std::min(ra, rb);
        if (!(chunk > 0.0)) break;
        const bool equal = (va == vb) ||
                           (std::isfinite(va) && std::isfinite(vb) &&
                            std::abs(va - vb) <= value_tol * std::max({1.0, std::abs(va), std::abs(vb)}));
        if (!equal) mismatch += chunk;
        consumed += chunk;
        if (ia < a.values.size()) {
            ra -= chunk;
            if (ra <= 1e-18 * total) {
                ++ia;
                if (ia < a.values.size()) ra = a.breaks[ia + 1] - a.breaks[ia];
            }
        }
        if (ib < b.values.size()) {
            rb -= chunk;
            if (rb <= 1e-18 * total) {
                ++ib;
                if (ib < b.values.size()) rb = b.breaks[ib + 1] - b.breaks[ib];
            }
        }
    }
    return mismatch;
}

Report check_exp_commutes(const GridFunction& s, double alpha) {
    if (!(alpha > 1.0)) throw std::invalid_argument("check_exp_commutes: alpha > 1 required");
    Report rep;
    rep.name = "exp_commutes_with_rearrangement";
    const GridFunction exp_s = s.transformed([alpha](double x) { return exp_base(alpha, x); });
    const StepRearrangement lhs = rearrange(exp_s);
    StepRearrangement rhs = rearrange(s);
    for (double& v : rhs.values) v = exp_base(alpha, v);
    const double mm = step_mismatch_measure(lhs, rhs, 1e-12);
    rep.metrics["mismatch_measure"] = mm;
    rep.add("(alpha^{s})^* == alpha^{s^*} as step functions", mm, 0.0, -mm,
            mm <= 1e-12 * std::max(1.0, lhs.total()));
    return rep;
}

Report check_restricted_rearrangement(const GridFunction& g,
                                      const std::vector<std::size_t>& E) {
    Report rep;
    rep.name = "restricted_rearrangement";
    for (double v : g.values())
        if (v < 0.0) throw std::invalid_argument("check_restricted_rearrangement: g >= 0 required");

    std::vector<char> in_e(g.size(), 0);
    double e_measure = 0.0;
    for (std::size_t i : E) {
        in_e.at(i) = 1;
        e_measure += g.partition().cell(i).measure;
    }
    double inf_e = kInfV, sup_out = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (in_e[i]) inf_e = std::min(inf_e, g.value(i));
        else sup_out = std::max(sup_out, g.value(i));
    }
    rep.metrics["E_measure"] = e_measure;
    if (!E.empty() && g.size() > E.size() && inf_e < sup_out) {
        rep.skipped = true;
        rep.notes.push_back("hypothesis inf_E g >= sup_{complement} g violated; identity may fail");
        rep.metrics["inf_E"] = inf_e;
        rep.metrics["sup_complement"] = sup_out;
        return rep;
    }

    std::vector<double> masked(g.size(), 0.0);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (in_e[i]) masked[i] = g.value(i);
    const StepRearrangement lhs = rearrange(GridFunction(g.partition_ptr(), std::move(masked)));

    // rhs: g^* truncated at t = |E| (tail forced to zero)
    StepRearrangement rhs = rearrange(g);
    StepRearrangement cut;
    cut.breaks.push_back(0.0);
    for (std::size_t j = 0; j < rhs.values.size(); ++j) {
        const double b0 = rhs.breaks[j], b1 = rhs.breaks[j + 1];
        if (b0 >= e_measure) break;
        cut.values.push_back(rhs.values[j]);
        cut.breaks.push_back(std::min(b1, e_measure));
    }
    if (cut.total() < rhs.total()) {
        cut.values.push_back(0.0);
        cut.breaks.push_back(rhs.total());
    }
    const double mm = step_mismatch_measure(lhs, cut, 1e-12);
    rep.metrics["mismatch_measure"] = mm;
    rep.add("(g chi_E)^* == g^* chi_{(0,|E|)}", mm, 0.0, -mm,
            mm <= 1e-12 * std::max(1.0, lhs.total()));
    return rep;
}

std::pair<double, double> equimeasurable_integral(const GridFunction& s, double alpha) {
    if (!(alpha > 1.0)) throw std::invalid_argument("equimeasurable_integral: alpha > 1 required");
    double lhs = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double term = exp_base(alpha, s.value(i));
        if (term == kInfV) { lhs = kInfV; break; }
        lhs += term * s.partition().cell(i).measure;
    }
    const double rhs = rearrange(s).integral_of_exp(alpha);
    return {lhs, rhs};
}

} // namespace vexspace

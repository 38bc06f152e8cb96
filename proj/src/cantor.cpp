#include "vexspace/cantor.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vexspace {

namespace {

constexpr int kTailCut = 1 << 20; // direct summation cutoff for family tails
constexpr int kMaxStage = 22;     // 2^22 intervals is the materialization cap

constexpr double kInfD() { return std::numeric_limits<double>::infinity(); }

// Euler-Maclaurin tail of sum_{k>=A} k^{-s}.
double zeta_tail_from(double A, double s) {
    const double integral = std::pow(A, 1.0 - s) / (s - 1.0);
    const double f = std::pow(A, -s);
    const double fp = -s * std::pow(A, -s - 1.0);
    const double fppp = -s * (s + 1.0) * (s + 2.0) * std::pow(A, -s - 3.0);
    return integral + 0.5 * f - fp / 12.0 + fppp / 720.0;
}

double loglog_term_raw(double k, double s) {
    const double w = std::log(k + 1.0);
    return 1.0 / ((k + 1.0) * std::pow(w, s));
}

// Euler-Maclaurin tail of sum_{k>=A} 1/((k+1) ln^s(k+1)).
double loglog_tail_from(double A, double s) {
    const double w = std::log(A + 1.0);
    const double integral = std::pow(w, 1.0 - s) / (s - 1.0);
    const double f = loglog_term_raw(A, s);
    const double fp = -(w + s) / ((A + 1.0) * (A + 1.0) * std::pow(w, s + 1.0));
    return integral + 0.5 * f - fp / 12.0;
}

} // namespace

double zeta_value(double s) {
    if (!(s > 1.0)) throw std::invalid_argument("zeta_value: s > 1 required");
    double sum = 0.0;
    for (int k = kTailCut - 1; k >= 1; --k) sum += std::pow(double(k), -s);
    return sum + zeta_tail_from(double(kTailCut), s);
}

double eta_value(double s) {
    if (!(s > 1.0)) throw std::invalid_argument("eta_value: s > 1 required");
    double sum = 0.0;
    for (int k = kTailCut - 1; k >= 1; --k) sum += loglog_term_raw(double(k), s);
    return sum + loglog_tail_from(double(kTailCut), s);
}

struct GapSequence::Impl {
    Family family = Family::geometric;
    double param = 0.0;
    double norm = 1.0;            // zeta(s) or eta(s)
    std::vector<double> suffix;   // suffix[n] = sum_{k>n, k<cut} raw terms (families)
    std::vector<double> terms;    // explicit lists
    std::vector<double> expl_rem; // explicit remainders

    double term(int k) const {
        if (k < 1) throw std::invalid_argument("GapSequence: k >= 1 required");
        switch (family) {
            case Family::geometric:
                return std::pow(param, k - 1) / std::pow(param + 1.0, k);
            case Family::zeta:
                return std::pow(double(k), -param) / norm;
            case Family::loglog:
                return loglog_term_raw(double(k), param) / norm;
            case Family::explicit_list:
                if (k > static_cast<int>(terms.size()))
                    throw std::out_of_range("GapSequence: explicit list exhausted");
                return terms[k - 1];
        }
        return 0.0;
    }

    double remainder(int n) const {
        if (n < 0) throw std::invalid_argument("GapSequence: n >= 0 required");
        switch (family) {
            case Family::geometric: {
                const double q = param / (param + 1.0);
                return std::pow(q, n);
            }
            case Family::zeta: {
                const double tail = n + 1 < kTailCut
                                        ? suffix[n] + zeta_tail_from(double(kTailCut), param)
                                        : zeta_tail_from(double(n + 1), param);
                return tail / norm;
            }
            case Family::loglog: {
                const double tail = n + 1 < kTailCut
                                        ? suffix[n] + loglog_tail_from(double(kTailCut), param)
                                        : loglog_tail_from(double(n + 1), param);
                return tail / norm;
            }
            case Family::explicit_list: {
                if (n >= static_cast<int>(expl_rem.size()))
                    throw std::out_of_range("GapSequence: explicit list exhausted");
                return expl_rem[n];
            }
        }
        return 0.0;
    }
};

GapSequence GapSequence::geometric(double a) {
    if (!(a > 0.0)) throw std::invalid_argument("GapSequence::geometric: a > 0 required");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::geometric;
    impl->param = a;
    GapSequence g;
    g.impl_ = impl;
    return g;
}

namespace {
std::vector<double> build_suffix(double s, bool loglog) {
    // suffix[n] = sum of raw terms for k in (n, kTailCut); summed ascending
    // in magnitude (large k first)
    std::vector<double> suf(kTailCut, 0.0);
    double acc = 0.0;
    for (int k = kTailCut - 1; k >= 1; --k) {
        acc += loglog ? loglog_term_raw(double(k), s) : std::pow(double(k), -s);
        suf[k - 1] = acc;
    }
    // suf[n] currently holds sum_{k>n}; shift check: suf[k-1] accumulated after
    // adding term k means suf[n] = sum_{k>=n+1} as required.
    return suf;
}
} // namespace

GapSequence GapSequence::zeta(double s) {
    if (!(s > 1.0)) throw std::invalid_argument("GapSequence::zeta: s > 1 required");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::zeta;
    impl->param = s;
    impl->norm = zeta_value(s);
    impl->suffix = build_suffix(s, false);
    GapSequence g;
    g.impl_ = impl;
    return g;
}

GapSequence GapSequence::loglog(double s) {
    if (!(s > 1.0)) throw std::invalid_argument("GapSequence::loglog: s > 1 required");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::loglog;
    impl->param = s;
    impl->norm = eta_value(s);
    impl->suffix = build_suffix(s, true);
    GapSequence g;
    g.impl_ = impl;
    return g;
}

GapSequence GapSequence::explicit_terms(std::vector<double> terms) {
    double sum = 0.0;
    for (double a : terms) {
        if (!(a > 0.0)) throw std::invalid_argument("GapSequence: gaps must be positive");
        sum += a;
    }
    if (sum > 1.0 + 1e-12)
        throw std::invalid_argument("GapSequence: explicit gap sum exceeds 1");
    auto impl = std::make_shared<Impl>();
    impl->family = Family::explicit_list;
    impl->terms = std::move(terms);
    impl->expl_rem.resize(impl->terms.size() + 1);
    double rem = 1.0;
    impl->expl_rem[0] = rem;
    for (std::size_t k = 0; k < impl->terms.size(); ++k) {
        rem -= impl->terms[k];
        impl->expl_rem[k + 1] = rem;
    }
    GapSequence g;
    g.impl_ = impl;
    return g;
}

GapSequence::Family GapSequence::family() const { return impl_->family; }
double GapSequence::param() const { return impl_->param; }
double GapSequence::term(int k) const { return impl_->term(k); }
double GapSequence::remainder(int n) const { return impl_->remainder(n); }
double GapSequence::eps(int n) const { return std::ldexp(impl_->remainder(n), -n); }

double GapSequence::sum_check(int terms) const {
    double s = 0.0;
    for (int k = 1; k <= terms; ++k) s += term(k);
    return s + remainder(terms);
}

int GapSequence::max_terms() const {
    return impl_->family == Family::explicit_list ? static_cast<int>(impl_->terms.size())
                                                  : INT_MAX;
}

CantorStage build_stage(const GapSequence& gaps, int n) {
    if (n < 0) throw std::invalid_argument("build_stage: n >= 0 required");
    if (n > kMaxStage)
        throw std::invalid_argument("build_stage: stage too deep to materialize; use phi_bounds");
    if (gaps.family() == GapSequence::Family::explicit_list && n > gaps.max_terms())
        throw std::invalid_argument("build_stage: explicit gap list exhausted");
    CantorStage st;
    st.n = n;
    st.endpoints = {0.0, 1.0};
    for (int k = 1; k <= n; ++k) {
        const double rem = gaps.remainder(k);
        if (!(rem > 0.0)) throw std::invalid_argument("build_stage: partial gap sums reach 1");
        const double child = std::ldexp(rem, -k); // 2^{-k} r_k, the exact child length
        std::vector<double> next;
        next.reserve(st.endpoints.size() * 2);
        for (std::size_t i = 0; i + 1 < st.endpoints.size(); i += 2) {
            const double L = st.endpoints[i], R = st.endpoints[i + 1];
            next.push_back(L);
            next.push_back(L + child);
            next.push_back(R - child);
            next.push_back(R);
        }
        st.endpoints = std::move(next);
    }
    st.r_n = gaps.remainder(n);
    st.eps_n = std::ldexp(st.r_n, -n);
    return st;
}

namespace {

// measure of the union of sorted open intervals (lo_i, hi_i), clipped to
// [clip_lo, clip_hi]; intervals arrive sorted by lo; touching runs merge
double swept_union_measure(const std::vector<std::pair<double, double>>& iv,
                           double clip_lo, double clip_hi) {
    double total = 0.0;
    double cur_lo = 0.0, cur_hi = -1.0;
    bool open = false;
    for (const auto& [a, b] : iv) {
        if (!open) {
            cur_lo = a;
            cur_hi = b;
            open = true;
        } else if (a <= cur_hi) {
            cur_hi = std::max(cur_hi, b);
        } else {
            total += std::max(0.0, std::min(cur_hi, clip_hi) - std::max(cur_lo, clip_lo));
            cur_lo = a;
            cur_hi = b;
        }
    }
    if (open) total += std::max(0.0, std::min(cur_hi, clip_hi) - std::max(cur_lo, clip_lo));
    return total;
}

} // namespace

NeighborhoodMeasure neighborhood_measure(const CantorStage& stage, double t, const Domain& omega) {
    if (!(t > 0.0)) throw std::invalid_argument("neighborhood_measure: t > 0 required");
    if (omega.dim() != 1) throw std::invalid_argument("neighborhood_measure: 1D domain required");
    if (omega.lower(0) > 0.0 || omega.upper(0) < 1.0)
        throw std::invalid_argument("neighborhood_measure: omega must contain [0,1]");
    const double clip_lo = omega.lower(0), clip_hi = omega.upper(0);

    std::vector<std::pair<double, double>> balls;
    balls.reserve(stage.endpoints.size());
    for (double e : stage.endpoints) balls.push_back({e - t, e + t});
    const double lower = swept_union_measure(balls, clip_lo, clip_hi);

    std::vector<std::pair<double, double>> fat;
    fat.reserve(stage.interval_count());
    for (std::size_t i = 0; i + 1 < stage.endpoints.size(); i += 2)
        fat.push_back({stage.endpoints[i] - t, stage.endpoints[i + 1] + t});
    const double upper = swept_union_measure(fat, clip_lo, clip_hi);

    NeighborhoodMeasure nm;
    nm.t = t;
    nm.lower = lower;
    nm.upper = upper;
    nm.exact = (upper - lower) <= 1e-14;
    return nm;
}

NeighborhoodMeasure phi_bounds(const GapSequence& gaps, int n, double t, const Domain& omega) {
    if (!(t > 0.0)) throw std::invalid_argument("phi_bounds: t > 0 required");
    if (omega.dim() != 1) throw std::invalid_argument("phi_bounds: 1D domain required");
    if (omega.lower(0) > 0.0 || omega.upper(0) < 1.0)
        throw std::invalid_argument("phi_bounds: omega must contain [0,1]");
    const double span_lo = std::max(-t, omega.lower(0));
    const double span_hi = std::min(1.0 + t, omega.upper(0));
    const double base = span_hi - span_lo;
    // dilating K_n by t leaves uncovered, inside each stage-k gap of length
    // g_k = a_k/2^{k-1}, a middle piece of length max(g_k - 2t, 0)
    double uncovered = 0.0;
    for (int k = 1; k <= n; ++k) {
        const double gk = std::ldexp(gaps.term(k), -(k - 1));
        const double leftover = gk - 2.0 * t;
        if (leftover > 0.0) uncovered += std::ldexp(leftover, k - 1);
    }
    const double upper = base - uncovered;
    // endpoint balls additionally miss the middle of each stage interval
    const double ell = gaps.eps(n);
    const double hole = ell - 2.0 * t;
    const double lower = hole > 0.0 ? upper - std::ldexp(hole, n) : upper;
    NeighborhoodMeasure nm;
    nm.t = t;
    nm.lower = lower;
    nm.upper = upper;
    nm.exact = (upper - lower) <= 1e-14;
    return nm;
}

int auto_stage(const GapSequence& gaps, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("auto_stage: t > 0 required");
    int n = 0;
    while (gaps.eps(n) > 2.0 * t) {
        ++n;
        if (n > 4096) throw std::invalid_argument("auto_stage: t too small to resolve");
        if (gaps.family() == GapSequence::Family::explicit_list && n > gaps.max_terms())
            throw std::invalid_argument("auto_stage: explicit gap list exhausted before eps_n <= 2t");
    }
    return n;
}

double phi_exact(const GapSequence& gaps, double t, const Domain& omega) {
    const int n = auto_stage(gaps, t);
    const NeighborhoodMeasure nm = phi_bounds(gaps, n, t, omega);
    return nm.upper;
}

double product_upper_bound(double phi_value, int N) {
    if (phi_value < 0.0) throw std::invalid_argument("product_upper_bound: phi >= 0 required");
    if (N < 1) throw std::invalid_argument("product_upper_bound: N >= 1 required");
    return std::pow(phi_value, N);
}

DistanceResult distance_to_set(const CantorStage& stage, double x) {
    if (stage.n < 1) throw std::invalid_argument("distance_to_set: stage n >= 1 required");
    const auto& e = stage.endpoints;
    auto it = std::lower_bound(e.begin(), e.end(), x);
    double best = kInfD();
    if (it != e.end()) best = std::min(best, *it - x);
    if (it != e.begin()) best = std::min(best, x - *(it - 1));
    return {best, 0.5 * stage.eps_n};
}

namespace {

std::pair<double, double> loglsq(const std::vector<std::pair<double, double>>& pts) {
    const double n = double(pts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icept = (sy - slope * sx) / n;
    return {slope, icept};
}

} // namespace

AsymptoticsReport verify_asymptotics(const GapSequence& gaps, const std::vector<double>& t_grid,
                                     const Domain& omega) {
    AsymptoticsReport out;
    Report& rep = out.report;
    rep.name = "cantor_asymptotics";
    if (t_grid.empty()) throw std::invalid_argument("verify_asymptotics: empty t grid");
    if (gaps.family() == GapSequence::Family::explicit_list)
        throw std::invalid_argument("verify_asymptotics: unsupported for explicit gap lists");

    std::vector<double> phis(t_grid.size());
    for (std::size_t i = 0; i < t_grid.size(); ++i) {
        const int n = auto_stage(gaps, t_grid[i]);
        const NeighborhoodMeasure nm = phi_bounds(gaps, n, t_grid[i], omega);
        if (!nm.exact) throw std::logic_error("verify_asymptotics: auto stage not in exact regime");
        phis[i] = nm.upper;
    }

    switch (gaps.family()) {
        case GapSequence::Family::geometric: {
            const double a = gaps.param();
            const double q = a / (a + 1.0);
            const double s = std::log(q) / std::log(q / 2.0);
            out.exponent = s;
            bool all = true;
            for (std::size_t i = 0; i < t_grid.size(); ++i) {
                const double lo = q * std::pow(t_grid[i], s);
                const double hi = (4.0 / q) * std::pow(t_grid[i], s);
                const bool ok = lo <= phis[i] * (1 + 1e-12) && phis[i] <= hi * (1 + 1e-12);
                all = all && ok;
                out.rows.push_back({t_grid[i], phis[i], phis[i], lo, hi});
            }
            rep.add("q t^s <= phi(t) <= (4/q) t^s on grid", q, 4.0 / q, 0.0, all);
            std::vector<std::pair<double, double>> pts;
            for (std::size_t i = 0; i < t_grid.size(); ++i)
                pts.push_back({std::log(t_grid[i]), std::log(phis[i])});
            out.slope = loglsq(pts).first;
            rep.metrics["slope"] = out.slope;
            rep.metrics["exponent"] = s;
            rep.add("log-log slope matches exponent", out.slope, s, 0.01 - std::abs(out.slope - s),
                    std::abs(out.slope - s) <= 0.01);
            break;
        }
        case GapSequence::Family::zeta: {
            const double s = gaps.param();
            out.exponent = s;
            double c1 = kInfD(), c2 = 0.0;
            for (std::size_t i = 0; i < t_grid.size(); ++i) {
                const double prod = phis[i] * std::pow(std::log(M_E / t_grid[i]), s - 1.0);
                c1 = std::min(c1, prod);
                c2 = std::max(c2, prod);
            }
            out.c1 = c1;
            out.c2 = c2;
            for (std::size_t i = 0; i < t_grid.size(); ++i) {
                const double env = std::pow(std::log(M_E / t_grid[i]), 1.0 - s);
                out.rows.push_back({t_grid[i], phis[i], phis[i], c1 * env, c2 * env});
            }
            rep.metrics["c1"] = c1;
            rep.metrics["c2"] = c2;
            rep.add("phi(t) (ln(e/t))^{s-1} bounded within factor 10", c1, c2, 10.0 - c2 / c1,
                    c2 <= 10.0 * c1 && c1 > 0.0);
            break;
        }
        case GapSequence::Family::loglog: {
            const double s = gaps.param();
            out.exponent = s;
            const double t_max = *std::max_element(t_grid.begin(), t_grid.end());
            // fit b: minimize the band ratio of phi * (ln ln(b/t))^{s-1} over a
            // log-spaced scan; b must keep ln(b/t) > 1 on the whole grid
            const double lb_min = std::log(M_E * t_max) + 0.05;
            double best_ratio = kInfD(), best_lb = lb_min, bc1 = 0, bc2 = 0;
            for (int j = 0; j <= 400; ++j) {
                const double lb = lb_min + (30.0 - lb_min) * j / 400.0;
                double c1 = kInfD(), c2 = 0.0;
                for (std::size_t i = 0; i < t_grid.size(); ++i) {
                    const double inner = lb - std::log(t_grid[i]);
                    const double prod = phis[i] * std::pow(std::log(inner), s - 1.0);
                    c1 = std::min(c1, prod);
                    c2 = std::max(c2, prod);
                }
                if (c2 / c1 < best_ratio) {
                    best_ratio = c2 / c1;
                    best_lb = lb;
                    bc1 = c1;
                    bc2 = c2;
                }
            }
            out.b = std::exp(best_lb);
            out.c1 = bc1;
            out.c2 = bc2;
            for (std::size_t i = 0; i < t_grid.size(); ++i) {
                const double env = std::pow(std::log(best_lb - std::log(t_grid[i])), 1.0 - s);
                out.rows.push_back({t_grid[i], phis[i], phis[i], bc1 * env, bc2 * env});
            }
            rep.metrics["c1"] = bc1;
            rep.metrics["c2"] = bc2;
            rep.metrics["b"] = out.b;
            rep.add("phi(t) (ln ln(b/t))^{s-1} bounded within factor 10 (fitted b)", bc1, bc2,
                    10.0 - bc2 / bc1, bc2 <= 10.0 * bc1 && bc1 > 0.0);
            break;
        }
        default:
            break;
    }
    return out;
}

} // namespace vexspace

#include "vexspace/obstruction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vexspace {

double PhiEnvelope::eval(double t) const {
    switch (form) {
        case Form::power: return C * std::pow(t, exponent);
        case Form::log_pow: return C * std::pow(std::log(M_E / t), 1.0 - exponent);
        case Form::loglog_pow: return C * std::pow(std::log(std::log(b / t)), 1.0 - exponent);
    }
    return 0.0;
}

struct ObstructionSet::Impl {
    enum class Kind { points, cantor } kind = Kind::points;
    bool embedded = false;
    std::vector<double> pts; // sorted
    std::optional<GapSequence> gaps;
    std::optional<CantorStage> stage; // distance skeleton
};

ObstructionSet ObstructionSet::points(std::vector<double> pts) {
    if (pts.empty()) throw std::invalid_argument("ObstructionSet: at least one point required");
    std::sort(pts.begin(), pts.end());
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::points;
    impl->pts = std::move(pts);
    ObstructionSet s;
    s.impl_ = impl;
    return s;
}

ObstructionSet ObstructionSet::cantor(const GapSequence& gaps, int distance_stage) {
    auto impl = std::make_shared<Impl>();
    impl->kind = Impl::Kind::cantor;
    impl->gaps = gaps;
    impl->stage = build_stage(gaps, distance_stage);
    ObstructionSet s;
    s.impl_ = impl;
    return s;
}

ObstructionSet ObstructionSet::embedded_slab(ObstructionSet base) {
    if (base.is_embedded()) throw std::invalid_argument("ObstructionSet: already embedded");
    auto impl = std::make_shared<Impl>(*base.impl_);
    impl->embedded = true;
    ObstructionSet s;
    s.impl_ = std::make_shared<const Impl>(std::move(*impl));
    return s;
}

int ObstructionSet::ambient_dim() const { return impl_->embedded ? 2 : 1; }
bool ObstructionSet::is_embedded() const { return impl_->embedded; }
bool ObstructionSet::is_cantor() const { return impl_->kind == Impl::Kind::cantor; }

const GapSequence& ObstructionSet::gaps() const {
    if (!impl_->gaps) throw std::logic_error("ObstructionSet: not a cantor set");
    return *impl_->gaps;
}

namespace {
double nearest_1d(const std::vector<double>& sorted, double x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    double best = std::numeric_limits<double>::infinity();
    if (it != sorted.end()) best = std::min(best, *it - x);
    if (it != sorted.begin()) best = std::min(best, x - *(it - 1));
    return best;
}
} // namespace

double ObstructionSet::distance_upper(const Point& x) const {
    const std::vector<double>& skel =
        impl_->kind == Impl::Kind::points ? impl_->pts : impl_->stage->endpoints;
    const double d1 = nearest_1d(skel, x[0]);
    if (!impl_->embedded) return d1;
    return std::hypot(d1, x[1]);
}

double ObstructionSet::distance_error() const {
    return impl_->kind == Impl::Kind::points ? 0.0 : 0.5 * impl_->stage->eps_n;
}

double ObstructionSet::phi(double t, const Domain& omega1d) const {
    if (!(t > 0.0)) throw std::invalid_argument("ObstructionSet::phi: t > 0 required");
    if (impl_->kind == Impl::Kind::cantor) return phi_exact(*impl_->gaps, t, omega1d);
    // exact union of point balls clipped to omega
    std::vector<std::pair<double, double>> iv;
    iv.reserve(impl_->pts.size());
    for (double p : impl_->pts) iv.push_back({p - t, p + t});
    double total = 0.0;
    double lo = iv.front().first, hi = iv.front().second;
    const double clo = omega1d.lower(0), chi = omega1d.upper(0);
    for (std::size_t i = 1; i < iv.size(); ++i) {
        if (iv[i].first <= hi) {
            hi = std::max(hi, iv[i].second);
        } else {
            total += std::max(0.0, std::min(hi, chi) - std::max(lo, clo));
            lo = iv[i].first;
            hi = iv[i].second;
        }
    }
    total += std::max(0.0, std::min(hi, chi) - std::max(lo, clo));
    return total;
}

PhiEnvelope ObstructionSet::make_envelope(const Domain& omega1d, double t_lo, double t_hi,
                                          int scan) const {
    if (!(t_lo > 0.0 && t_hi > t_lo)) throw std::invalid_argument("make_envelope: bad t range");
    std::vector<double> ts(scan);
    for (int i = 0; i < scan; ++i)
        ts[i] = t_lo * std::pow(t_hi / t_lo, double(i) / (scan - 1));

    PhiEnvelope env;
    if (impl_->kind == Impl::Kind::points) {
        env.form = PhiEnvelope::Form::power;
        env.exponent = 1.0;
        env.C = 2.0 * double(impl_->pts.size());
        env.provenance = "union of point balls: phi(t) <= 2 t #points";
    } else {
        const GapSequence& g = *impl_->gaps;
        switch (g.family()) {
            case GapSequence::Family::geometric: {
                const double a = g.param();
                const double q = a / (a + 1.0);
                env.form = PhiEnvelope::Form::power;
                env.exponent = std::log(q) / std::log(q / 2.0);
                env.C = 4.0 / q;
                env.provenance = "geometric gap family: phi(t) <= (4/q) t^s";
                break;
            }
            case GapSequence::Family::zeta: {
                env.form = PhiEnvelope::Form::log_pow;
                env.exponent = g.param();
                double cmax = 0.0;
                for (double t : ts)
                    cmax = std::max(cmax, phi(t, omega1d) *
                                              std::pow(std::log(M_E / t), g.param() - 1.0));
                env.C = cmax * (1.0 + 1e-9);
                env.provenance = "zeta gap family: fitted C for phi <= C (ln(e/t))^{1-s}";
                break;
            }
            case GapSequence::Family::loglog: {
                env.form = PhiEnvelope::Form::loglog_pow;
                env.exponent = g.param();
                env.b = std::exp(std::log(M_E * t_hi) + 0.5);
                double cmax = 0.0;
                for (double t : ts)
                    cmax = std::max(cmax, phi(t, omega1d) *
                                              std::pow(std::log(std::log(env.b / t)),
                                                       g.param() - 1.0));
                env.C = cmax * (1.0 + 1e-9);
                env.provenance = "loglog gap family: fitted (C, b) for phi <= C (lnln(b/t))^{1-s}";
                break;
            }
            default:
                throw std::invalid_argument("make_envelope: unsupported gap family");
        }
    }

    if (impl_->embedded) {
        // K x {0} inside a 2D box: |K_2(t)| <= 2t |K_1(t)|
        if (env.form != PhiEnvelope::Form::power)
            throw std::invalid_argument(
                "make_envelope: embedded slab envelopes support power-form bases only");
        env.exponent += 1.0;
        env.C *= 2.0;
        env.provenance += "; slab bound |K2(t)| <= 2t |K1(t)|";
    } else {
        // scan verification of the bound on the requested range
        for (double t : ts) {
            if (phi(t, omega1d) > env.eval(t) * (1.0 + 1e-9))
                throw std::logic_error("make_envelope: envelope violated on scan grid");
        }
    }
    return env;
}

std::vector<Point> ObstructionSet::refinement_hints(int max_points) const {
    std::vector<double> xs;
    if (impl_->kind == Impl::Kind::points) {
        xs = impl_->pts;
    } else {
        const auto& e = impl_->stage->endpoints;
        if (static_cast<int>(e.size()) <= max_points) {
            xs = e;
        } else {
            const std::size_t stride = e.size() / max_points + 1;
            for (std::size_t i = 0; i < e.size(); i += stride) xs.push_back(e[i]);
        }
    }
    std::vector<Point> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back({x, 0.0, 0.0});
    return out;
}

} // namespace vexspace

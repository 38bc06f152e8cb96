#include "vexspace/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vexspace {

struct ExponentField::Impl {
    Domain dom;
    std::string name;
    Fn fn;
    bool constant = false;
    double cvalue = 0.0;
    Impl(const Domain& d, std::string n, Fn f) : dom(d), name(std::move(n)), fn(std::move(f)) {}
};

ExponentField ExponentField::constant(const Domain& dom, double c) {
    if (!(c >= 1.0)) throw std::invalid_argument("ExponentField: exponents must satisfy p >= 1");
    ExponentField e;
    auto impl = std::make_shared<Impl>(dom, "constant", [c](const Point&) { return c; });
    impl->constant = true;
    impl->cvalue = c;
    e.impl_ = impl;
    return e;
}

ExponentField ExponentField::make(const Domain& dom, std::string name, Fn f) {
    if (!f) throw std::invalid_argument("ExponentField: null callable");
    ExponentField e;
    e.impl_ = std::make_shared<Impl>(dom, std::move(name), std::move(f));
    return e;
}

double ExponentField::operator()(const Point& x) const {
    const double v = impl_->fn(x);
    if (std::isnan(v)) throw std::domain_error("ExponentField '" + impl_->name + "': NaN exponent value");
    if (!(v >= 1.0) && v != kInf)
        throw std::domain_error("ExponentField '" + impl_->name + "': exponent < 1 at a sampled point");
    return v;
}

const Domain& ExponentField::domain() const { return impl_->dom; }
const std::string& ExponentField::name() const { return impl_->name; }
bool ExponentField::is_constant() const { return impl_->constant; }
double ExponentField::constant_value() const { return impl_->cvalue; }

namespace {
int default_bounds_grid(int dim) {
    switch (dim) {
        case 1: return 2048;
        case 2: return 128;
        default: return 48;
    }
}
} // namespace

ExponentBounds ExponentField::bounds(int grid_per_axis) const {
    const Domain& d = impl_->dom;
    if (grid_per_axis <= 0) grid_per_axis = default_bounds_grid(d.dim());
    if (impl_->constant) return {impl_->cvalue, impl_->cvalue, grid_per_axis};
    ExponentBounds b{kInf, -kInf, grid_per_axis};
    const int dim = d.dim();
    std::array<int, 3> n{1, 1, 1};
    for (int i = 0; i < dim; ++i) n[i] = grid_per_axis;
    std::array<int, 3> idx{0, 0, 0};
    std::size_t total = 1;
    for (int i = 0; i < dim; ++i) total *= static_cast<std::size_t>(n[i]);
    for (std::size_t flat = 0; flat < total; ++flat) {
        Point x{0, 0, 0};
        for (int i = 0; i < dim; ++i) {
            // midpoints; for balls the bounding box is scanned and points
            // outside the ball are skipped
            x[i] = d.lower(i) + (idx[i] + 0.5) * (d.upper(i) - d.lower(i)) / n[i];
        }
        bool ok = d.kind() != Domain::Kind::ball || d.contains(x);
        if (ok) {
            const double v = (*this)(x);
            b.lo = std::min(b.lo, v);
            b.hi = std::max(b.hi, v);
        }
        for (int i = 0; i < dim; ++i) {
            if (++idx[i] < n[i]) break;
            idx[i] = 0;
        }
    }
    return b;
}

ExponentField ExponentField::family(const Domain& dom, const std::string& name,
                                    const std::map<std::string, double>& params,
                                    const std::vector<double>& breaks,
                                    const std::vector<double>& levels) {
    auto get = [&](const std::string& k, double dflt) {
        auto it = params.find(k);
        return it == params.end() ? dflt : it->second;
    };
    if (name == "constant") return constant(dom, get("value", 2.0));
    if (name == "affine") {
        const double a = get("a", 1.0), b = get("b", 1.0);
        const int axis = static_cast<int>(get("axis", 0));
        return make(dom, "affine", [a, b, axis](const Point& x) { return a + b * x[axis]; });
    }
    if (name == "sqrt") {
        const double a = get("a", 2.0), b = get("b", 1.0);
        return make(dom, "sqrt", [a, b](const Point& x) { return a + b * std::sqrt(std::max(x[0], 0.0)); });
    }
    if (name == "inv_log") {
        // a + b / ln(c/x); the log-Holder model family for c = e^2
        const double a = get("a", 2.0), b = get("b", -1.0), c = get("c", std::exp(2.0));
        return make(dom, "inv_log", [a, b, c](const Point& x) {
            const double L = std::log(c / x[0]);
            return a + b / L;
        });
    }
    if (name == "plus_inv_sqrt_log") {
        // base + 1/sqrt(ln(scale/x)); the gap 1/(p-q) is then sqrt(ln(scale/x))
        const double base = get("base", 2.0), scale = get("scale", 1.0);
        return make(dom, "plus_inv_sqrt_log", [base, scale](const Point& x) {
            const double L = std::log(scale / x[0]);
            if (L <= 0.0) return kInf;
            return base + 1.0 / std::sqrt(L);
        });
    }
    if (name == "step") {
        if (levels.empty() || breaks.size() + 1 != levels.size())
            throw std::invalid_argument("ExponentField: step family needs breaks.size()+1 == levels.size()");
        auto br = breaks;
        auto lv = levels;
        return make(dom, "step", [br, lv](const Point& x) {
            std::size_t i = std::upper_bound(br.begin(), br.end(), x[0]) - br.begin();
            return lv[i];
        });
    }
    throw std::invalid_argument("ExponentField: unknown family '" + name + "'");
}

ExponentField ExponentField::from_grid_csv(const Domain& dom, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("ExponentField: cannot open grid file " + path);
    std::vector<Point> pts;
    std::vector<double> vals;
    std::string line;
    const int dim = dom.dim();
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        Point x{0, 0, 0};
        double v = 0.0;
        char comma;
        for (int i = 0; i < dim; ++i) {
            if (!(ss >> x[i])) throw std::invalid_argument("ExponentField: bad grid row: " + line);
            ss >> comma;
        }
        if (!(ss >> v)) throw std::invalid_argument("ExponentField: bad grid row: " + line);
        pts.push_back(x);
        vals.push_back(v);
    }
    if (pts.empty()) throw std::invalid_argument("ExponentField: empty grid file " + path);
    return make(dom, "grid:" + path, [pts, vals, dim](const Point& x) {
        std::size_t best = 0;
        double bd = kInf;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            const double d = distance(pts[i], x, dim);
            if (d < bd) { bd = d; best = i; }
        }
        return vals[best];
    });
}

ExponentField sobolev_conjugate(const ExponentField& p, int N) {
    if (N < 1) throw std::invalid_argument("sobolev_conjugate: N must be a positive integer");
    const ExponentBounds b = p.bounds();
    if (!(b.hi < N))
        throw std::domain_error("sobolev_conjugate: requires p+ < N (got p+ = " + std::to_string(b.hi) + ")");
    ExponentField pc = p;
    const double n = N;
    return ExponentField::make(p.domain(), "sobolev_conjugate(" + p.name() + ")",
                               [pc, n](const Point& x) {
                                   const double v = pc(x);
                                   if (!(v < n))
                                       throw std::domain_error("sobolev_conjugate: p(x) >= N at a sampled point");
                                   return n * v / (n - v);
                               });
}

RatioFields ratio_exponents(const ExponentField& p, const ExponentField& q) {
    const Domain& dom = p.domain();
    // eager pointwise check on the default evaluation grid
    {
        auto part = Partition::uniform_box(
            dom.kind() == Domain::Kind::ball
                ? Domain::box([&] {
                      std::vector<std::pair<double, double>> bb;
                      for (int i = 0; i < dom.dim(); ++i) bb.push_back({dom.lower(i), dom.upper(i)});
                      return bb;
                  }())
                : dom,
            dom.dim() == 1 ? 1024 : 48);
        for (const Cell& c : part->cells()) {
            if (dom.kind() == Domain::Kind::ball && !dom.contains(c.center)) continue;
            const double pv = p(c.center), qv = q(c.center);
            if (qv > pv + kCoincidenceTol)
                throw std::invalid_argument("ratio_exponents: q(x) > p(x) at a grid point");
        }
    }
    ExponentField pc = p, qc = q;
    auto r = ExponentField::make(dom, "ratio(" + p.name() + "/" + q.name() + ")",
                                 [pc, qc](const Point& x) {
                                     const double pv = pc(x), qv = qc(x);
                                     if (qv > pv + kCoincidenceTol)
                                         throw std::invalid_argument("ratio_exponents: q(x) > p(x)");
                                     return pv / qv;
                                 });
    auto rc = ExponentField::make(dom, "conjugate_ratio(" + p.name() + "/" + q.name() + ")",
                                  [pc, qc](const Point& x) {
                                      const double pv = pc(x), qv = qc(x);
                                      if (qv > pv + kCoincidenceTol)
                                          throw std::invalid_argument("ratio_exponents: q(x) > p(x)");
                                      if (pv - qv <= kCoincidenceTol) return kInf;
                                      const double r = pv / qv;
                                      return r / (r - 1.0);
                                  });
    auto s = ExponentField::make(dom, "gap_reciprocal(" + p.name() + "," + q.name() + ")",
                                 [pc, qc](const Point& x) {
                                     const double pv = pc(x), qv = qc(x);
                                     if (qv > pv + kCoincidenceTol)
                                         throw std::invalid_argument("ratio_exponents: q(x) > p(x)");
                                     if (pv - qv <= kCoincidenceTol) return kInf;
                                     return 1.0 / (pv - qv);
                                 });
    return {std::move(r), std::move(rc), std::move(s)};
}

double log_holder_modulus(const ExponentField& p, int samples) {
    if (samples < 2) throw std::invalid_argument("log_holder_modulus: samples >= 2 required");
    const Domain& d = p.domain();
    if (p.is_constant()) return 0.0;
    const int dim = d.dim();
    int per_axis = samples;
    if (dim == 2) per_axis = std::max(2, static_cast<int>(std::sqrt(double(samples))));
    if (dim == 3) per_axis = std::max(2, static_cast<int>(std::cbrt(double(samples))));
    per_axis = std::min(per_axis, dim == 1 ? 4000 : 64);

    std::vector<Point> pts;
    std::vector<double> vals;
    std::array<int, 3> n{1, 1, 1};
    for (int i = 0; i < dim; ++i) n[i] = per_axis;
    std::array<int, 3> idx{0, 0, 0};
    std::size_t total = 1;
    for (int i = 0; i < dim; ++i) total *= static_cast<std::size_t>(n[i]);
    for (std::size_t flat = 0; flat < total; ++flat) {
        Point x{0, 0, 0};
        for (int i = 0; i < dim; ++i)
            x[i] = d.lower(i) + (idx[i] + 0.5) * (d.upper(i) - d.lower(i)) / n[i];
        if (d.kind() != Domain::Kind::ball || d.contains(x)) {
            pts.push_back(x);
            vals.push_back(p(x));
        }
        for (int i = 0; i < dim; ++i) {
            if (++idx[i] < n[i]) break;
            idx[i] = 0;
        }
    }
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double dist = distance(pts[i], pts[j], dim);
            if (dist <= 0.0 || dist > 0.5) continue;
            const double c = std::abs(vals[i] - vals[j]) * (-std::log(dist));
            if (c > best) best = c;
        }
    }
    return best;
}

} // namespace vexspace

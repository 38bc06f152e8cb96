#include "vexspace/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace vexspace {

void Partition::finalize() {
    double sum = 0.0;
    for (const auto& c : cells_) {
        if (!(c.measure > 0.0))
            throw std::invalid_argument("Partition: cell measures must be positive");
        sum += c.measure;
    }
    total_measure_ = sum;
    const double ref = dom_.measure();
    if (std::abs(sum - ref) > 1e-12 * std::max(1.0, std::abs(ref)))
        throw std::logic_error("Partition: cell measures do not sum to the domain measure");
}

std::shared_ptr<const Partition> Partition::uniform_box(const Domain& dom, int cells_per_axis) {
    std::array<int, 3> n{1, 1, 1};
    for (int i = 0; i < dom.dim(); ++i) n[i] = cells_per_axis;
    return uniform_box(dom, n);
}

std::shared_ptr<const Partition>
Partition::uniform_box(const Domain& dom, const std::array<int, 3>& n) {
    if (dom.kind() == Domain::Kind::ball)
        throw std::invalid_argument("Partition: box grids require interval/box domains");
    const int dim = dom.dim();
    for (int i = 0; i < dim; ++i)
        if (n[i] < 1) throw std::invalid_argument("Partition: cells_per_axis must be >= 1");

    auto p = std::shared_ptr<Partition>(new Partition(dom, Kind::box_grid));
    std::array<double, 3> h{0, 0, 0};
    std::size_t total = 1;
    for (int i = 0; i < dim; ++i) {
        h[i] = (dom.upper(i) - dom.lower(i)) / n[i];
        total *= static_cast<std::size_t>(n[i]);
    }
    p->cells_.reserve(total);
    p->boxes_.reserve(total);
    std::array<int, 3> idx{0, 0, 0};
    for (std::size_t flat = 0; flat < total; ++flat) {
        Cell c;
        CellBox b;
        double meas = 1.0;
        for (int i = 0; i < dim; ++i) {
            b.lo[i] = dom.lower(i) + idx[i] * h[i];
            b.hi[i] = (idx[i] + 1 == n[i]) ? dom.upper(i) : dom.lower(i) + (idx[i] + 1) * h[i];
            c.center[i] = 0.5 * (b.lo[i] + b.hi[i]);
            meas *= (b.hi[i] - b.lo[i]);
        }
        c.measure = meas;
        p->cells_.push_back(c);
        p->boxes_.push_back(b);
        for (int i = 0; i < dim; ++i) {
            if (++idx[i] < n[i]) break;
            idx[i] = 0;
        }
    }
    p->finalize();
    return p;
}

std::shared_ptr<const Partition>
Partition::polar_disk(const Point& center, double radius, int shells, int sectors) {
    if (shells < 1 || sectors < 1)
        throw std::invalid_argument("Partition: shells/sectors must be >= 1");
    const Domain dom = Domain::ball(center, radius, 2);
    auto p = std::shared_ptr<Partition>(new Partition(dom, Kind::polar_disk));
    p->cells_.reserve(static_cast<std::size_t>(shells) * sectors);
    p->shells_.reserve(static_cast<std::size_t>(shells) * sectors);
    const double dth = 2.0 * M_PI / sectors;
    // |cell| = (th1-th0)/2 * (r1^2 - r0^2), exact for polar boxes; the sector
    // widths are uniform so the ring areas telescope to pi r^2 exactly up to
    // rounding.  Measures are normalized so the total matches pi r^2.
    double raw_total = 0.0;
    std::vector<double> raw;
    raw.reserve(static_cast<std::size_t>(shells) * sectors);
    for (int i = 0; i < shells; ++i) {
        const double r0 = radius * i / shells;
        const double r1 = radius * (i + 1) / shells;
        const double rmid = 0.5 * (r0 + r1);
        for (int j = 0; j < sectors; ++j) {
            const double th0 = j * dth;
            const double th1 = (j + 1 == sectors) ? 2.0 * M_PI : (j + 1) * dth;
            const double thmid = 0.5 * (th0 + th1);
            Cell c;
            c.center = {center[0] + rmid * std::cos(thmid), center[1] + rmid * std::sin(thmid), 0.0};
            const double meas = 0.5 * (th1 - th0) * (r1 * r1 - r0 * r0);
            c.measure = meas;
            raw_total += meas;
            raw.push_back(meas);
            p->cells_.push_back(c);
            p->shells_.push_back({r0, r1, th0, th1});
        }
    }
    const double scale = dom.measure() / raw_total;
    for (std::size_t i = 0; i < p->cells_.size(); ++i) p->cells_[i].measure = raw[i] * scale;
    p->finalize();
    return p;
}

std::shared_ptr<const Partition>
Partition::radial_shells(const Point& center, double radius, int shells, int dim) {
    if (shells < 1) throw std::invalid_argument("Partition: shells must be >= 1");
    const Domain dom = Domain::ball(center, radius, dim);
    auto p = std::shared_ptr<Partition>(new Partition(dom, Kind::radial_shells));
    const double vN = unit_ball_volume(dim);
    double raw_total = 0.0;
    std::vector<double> raw;
    raw.reserve(shells);
    for (int i = 0; i < shells; ++i) {
        const double r0 = radius * i / shells;
        const double r1 = radius * (i + 1) / shells;
        const double rmid = 0.5 * (r0 + r1);
        Cell c;
        c.center = center;
        c.center[0] += rmid;
        const double meas = vN * (std::pow(r1, dim) - std::pow(r0, dim));
        c.measure = meas;
        raw_total += meas;
        raw.push_back(meas);
        p->cells_.push_back(c);
        p->shells_.push_back({r0, r1, 0.0, 0.0});
    }
    const double scale = dom.measure() / raw_total;
    for (std::size_t i = 0; i < p->cells_.size(); ++i) p->cells_[i].measure = raw[i] * scale;
    p->finalize();
    return p;
}

namespace {

void split_box(const Domain& dom, const CellBox& b, int dim,
               std::vector<Cell>& cells, std::vector<CellBox>& boxes) {
    const int children = 1 << dim;
    for (int mask = 0; mask < children; ++mask) {
        CellBox nb;
        Cell nc;
        double meas = 1.0;
        for (int i = 0; i < dim; ++i) {
            const double mid = 0.5 * (b.lo[i] + b.hi[i]);
            nb.lo[i] = (mask >> i & 1) ? mid : b.lo[i];
            nb.hi[i] = (mask >> i & 1) ? b.hi[i] : mid;
            nc.center[i] = 0.5 * (nb.lo[i] + nb.hi[i]);
            meas *= (nb.hi[i] - nb.lo[i]);
        }
        (void)dom;
        nc.measure = meas;
        cells.push_back(nc);
        boxes.push_back(nb);
    }
}

} // namespace

std::shared_ptr<const Partition> Partition::refined() const {
    if (kind_ != Kind::box_grid)
        throw std::logic_error("Partition: refinement is supported for box grids only");
    auto p = std::shared_ptr<Partition>(new Partition(dom_, kind_));
    const int dim = dom_.dim();
    p->cells_.reserve(cells_.size() << dim);
    p->boxes_.reserve(cells_.size() << dim);
    for (std::size_t i = 0; i < cells_.size(); ++i)
        split_box(dom_, boxes_[i], dim, p->cells_, p->boxes_);
    p->finalize();
    return p;
}

std::shared_ptr<const Partition>
Partition::refined_toward(std::span<const Point> hints) const {
    if (kind_ != Kind::box_grid)
        throw std::logic_error("Partition: refinement is supported for box grids only");
    auto p = std::shared_ptr<Partition>(new Partition(dom_, kind_));
    const int dim = dom_.dim();
    p->cells_.reserve(cells_.size() + hints.size());
    p->boxes_.reserve(cells_.size() + hints.size());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const CellBox& b = boxes_[i];
        bool hit = false;
        for (const Point& h : hints) {
            bool inside = true;
            for (int d = 0; d < dim; ++d)
                if (h[d] < b.lo[d] || h[d] > b.hi[d]) { inside = false; break; }
            if (inside) { hit = true; break; }
        }
        if (hit) {
            split_box(dom_, b, dim, p->cells_, p->boxes_);
        } else {
            p->cells_.push_back(cells_[i]);
            p->boxes_.push_back(b);
        }
    }
    p->finalize();
    return p;
}

GridFunction::GridFunction(std::shared_ptr<const Partition> part, std::vector<double> values,
                           Sampler sampler)
    : part_(std::move(part)), values_(std::move(values)), sampler_(std::move(sampler)) {
    if (!part_) throw std::invalid_argument("GridFunction: null partition");
    if (values_.size() != part_->size())
        throw std::invalid_argument("GridFunction: value count does not match partition");
}

GridFunction GridFunction::sample(std::shared_ptr<const Partition> part, Sampler f) {
    if (!f) throw std::invalid_argument("GridFunction::sample: null sampler");
    std::vector<double> v(part->size());
    for (std::size_t i = 0; i < part->size(); ++i) v[i] = f(part->cell(i).center);
    return GridFunction(std::move(part), std::move(v), std::move(f));
}

GridFunction GridFunction::constant(std::shared_ptr<const Partition> part, double c) {
    std::vector<double> v(part->size(), c);
    return GridFunction(std::move(part), std::move(v), [c](const Point&) { return c; });
}

GridFunction GridFunction::indicator(std::shared_ptr<const Partition> part,
                                     const std::vector<std::size_t>& cells) {
    std::vector<double> v(part->size(), 0.0);
    for (std::size_t i : cells) v.at(i) = 1.0;
    return GridFunction(std::move(part), std::move(v));
}

GridFunction GridFunction::refined() const {
    auto rp = part_->refined();
    if (sampler_) return sample(rp, sampler_);
    // value inheritance: refined() emits children of cell i contiguously
    const int dim = domain().dim();
    const int children = 1 << dim;
    std::vector<double> v;
    v.reserve(values_.size() * children);
    for (double x : values_)
        for (int c = 0; c < children; ++c) v.push_back(x);
    return GridFunction(rp, std::move(v));
}

GridFunction GridFunction::refined_toward(std::span<const Point> hints) const {
    auto rp = part_->refined_toward(hints);
    if (sampler_) return sample(rp, sampler_);
    // re-associate by box lookup order: refined_toward preserves cell order,
    // splitting hit cells in place
    const int dim = domain().dim();
    const int children = 1 << dim;
    std::vector<double> v;
    v.reserve(rp->size());
    std::size_t j = 0;
    for (std::size_t i = 0; i < part_->size(); ++i) {
        const CellBox& b = part_->box(i);
        const CellBox& nb = rp->box(j);
        const bool split = !(nb.lo[0] == b.lo[0] && nb.hi[0] == b.hi[0] &&
                             (dim < 2 || (nb.lo[1] == b.lo[1] && nb.hi[1] == b.hi[1])) &&
                             (dim < 3 || (nb.lo[2] == b.lo[2] && nb.hi[2] == b.hi[2])));
        const int copies = split ? children : 1;
        for (int c = 0; c < copies; ++c, ++j) v.push_back(values_[i]);
    }
    return GridFunction(rp, std::move(v));
}

GridFunction GridFunction::transformed(const std::function<double(double)>& f) const {
    std::vector<double> v(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) v[i] = f(values_[i]);
    if (sampler_) {
        auto s = sampler_;
        return GridFunction(part_, std::move(v), [s, f](const Point& x) { return f(s(x)); });
    }
    return GridFunction(part_, std::move(v));
}

GridFunction GridFunction::combined(const GridFunction& other,
                                    const std::function<double(double, double)>& f) const {
    if (other.part_ != part_)
        throw std::invalid_argument("GridFunction: combined requires a shared partition");
    std::vector<double> v(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) v[i] = f(values_[i], other.values_[i]);
    return GridFunction(part_, std::move(v));
}

GridFunction GridFunction::scaled(double c) const {
    return transformed([c](double x) { return c * x; });
}

double GridFunction::integral() const {
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * part_->cell(i).measure;
    return s;
}

std::vector<Point> lift_points_1d(std::span<const double> xs) {
    std::vector<Point> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back({x, 0.0, 0.0});
    return out;
}

} // namespace vexspace

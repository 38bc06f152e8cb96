#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace vexspace {

// Points live in at most three dimensions; the active dimension is carried
// by the Domain they belong to.
using Point = std::array<double, 3>;

inline double distance(const Point& a, const Point& b, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

/// Volume of the unit ball in R^dim.
inline double unit_ball_volume(int dim) {
    return std::pow(M_PI, 0.5 * dim) / std::tgamma(0.5 * dim + 1.0);
}

/// Surface area of the unit sphere S^{dim-1} in R^dim.
inline double unit_sphere_area(int dim) {
    return dim * unit_ball_volume(dim);
}

class Domain {
  public:
    enum class Kind { interval, box, ball };

    static Domain interval(double lo, double hi) {
        return box({{lo, hi}});
    }

    static Domain box(const std::vector<std::pair<double, double>>& bounds) {
        if (bounds.empty() || bounds.size() > 3)
            throw std::invalid_argument("Domain: dimension must be 1..3");
        Domain d;
        d.kind_ = bounds.size() == 1 ? Kind::interval : Kind::box;
        d.dim_ = static_cast<int>(bounds.size());
        double meas = 1.0, diag2 = 0.0;
        for (int i = 0; i < d.dim_; ++i) {
            if (!(bounds[i].first < bounds[i].second))
                throw std::invalid_argument("Domain: lower < upper required on every axis");
            d.lo_[i] = bounds[i].first;
            d.hi_[i] = bounds[i].second;
            const double side = bounds[i].second - bounds[i].first;
            meas *= side;
            diag2 += side * side;
        }
        d.measure_ = meas;
        d.diameter_ = std::sqrt(diag2);
        return d;
    }

    static Domain ball(const Point& center, double radius, int dim) {
        if (dim < 1 || dim > 3) throw std::invalid_argument("Domain: dimension must be 1..3");
        if (!(radius > 0.0)) throw std::invalid_argument("Domain: ball radius must be positive");
        Domain d;
        d.kind_ = Kind::ball;
        d.dim_ = dim;
        d.center_ = center;
        d.radius_ = radius;
        d.measure_ = unit_ball_volume(dim) * std::pow(radius, dim);
        d.diameter_ = 2.0 * radius;
        for (int i = 0; i < dim; ++i) {
            d.lo_[i] = center[i] - radius;
            d.hi_[i] = center[i] + radius;
        }
        return d;
    }

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    double measure() const { return measure_; }
    double diameter() const { return diameter_; }

    double lower(int axis) const { return lo_[axis]; }
    double upper(int axis) const { return hi_[axis]; }
    const Point& center() const { return center_; }
    double radius() const { return radius_; }

    bool contains(const Point& x) const {
        if (kind_ == Kind::ball) return distance(x, center_, dim_) <= radius_;
        for (int i = 0; i < dim_; ++i)
            if (x[i] < lo_[i] || x[i] > hi_[i]) return false;
        return true;
    }

  private:
    Domain() = default;
    Kind kind_ = Kind::interval;
    int dim_ = 1;
    double measure_ = 0.0;
    double diameter_ = 0.0;
    Point lo_{0, 0, 0};
    Point hi_{0, 0, 0};
    Point center_{0, 0, 0};
    double radius_ = 0.0;
};

} // namespace vexspace

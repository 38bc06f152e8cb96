#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "vexspace/geometry.hpp"

namespace vexspace {

struct Cell {
    Point center{0, 0, 0};
    double measure = 0.0;
};

/// Per-cell box geometry (box partitions only); used for dyadic refinement.
struct CellBox {
    Point lo{0, 0, 0};
    Point hi{0, 0, 0};
};

/// Per-cell annular geometry (polar/shell partitions only).
struct CellShell {
    double r0 = 0.0, r1 = 0.0;   // radial bounds
    double th0 = 0.0, th1 = 0.0; // angular bounds (2D polar), unused for pure shells
};

/// An immutable measured partition of a Domain. Cell measures sum to the
/// domain measure to 1e-12 relative (checked at construction).
class Partition {
  public:
    enum class Kind { box_grid, polar_disk, radial_shells };

    static std::shared_ptr<const Partition>
    uniform_box(const Domain& dom, int cells_per_axis);

    static std::shared_ptr<const Partition>
    uniform_box(const Domain& dom, const std::array<int, 3>& cells_per_axis);

    /// 2D polar partition of a disk: `shells` radial rings x `sectors` sectors.
    static std::shared_ptr<const Partition>
    polar_disk(const Point& center, double radius, int shells, int sectors);

    /// Radial shell partition of a ball in R^dim (cells are full shells;
    /// centers sit at (rmid, 0, ..) offsets from the ball center).
    static std::shared_ptr<const Partition>
    radial_shells(const Point& center, double radius, int shells, int dim);

    Kind kind() const { return kind_; }
    const Domain& domain() const { return dom_; }
    std::size_t size() const { return cells_.size(); }
    const Cell& cell(std::size_t i) const { return cells_[i]; }
    std::span<const Cell> cells() const { return cells_; }
    double total_measure() const { return total_measure_; }

    const CellBox& box(std::size_t i) const { return boxes_[i]; }
    const CellShell& shell(std::size_t i) const { return shells_[i]; }
    bool has_boxes() const { return !boxes_.empty(); }

    /// Split every box cell into 2^dim children. Box partitions only.
    std::shared_ptr<const Partition> refined() const;

    /// Split cells whose closed box contains one of the hint points
    /// (1D hints are x-coordinates matched against axis 0 when dim > 1
    /// is not intended; pass full points for N-D). One dyadic level.
    std::shared_ptr<const Partition> refined_toward(std::span<const Point> hints) const;

  private:
    Partition(const Domain& dom, Kind kind) : dom_(dom), kind_(kind) {}
    void finalize();

    Domain dom_;
    Kind kind_;
    std::vector<Cell> cells_;
    std::vector<CellBox> boxes_;
    std::vector<CellShell> shells_;
    double total_measure_ = 0.0;
};

/// A sampled real function on a measured partition: the common currency of
/// quadrature and rearrangement. When built from an expression the sampler
/// is retained so the function can refine itself; piecewise-constant data
/// refines by value inheritance (children keep the parent value).
class GridFunction {
  public:
    using Sampler = std::function<double(const Point&)>;

    GridFunction(std::shared_ptr<const Partition> part, std::vector<double> values,
                 Sampler sampler = nullptr);

    static GridFunction sample(std::shared_ptr<const Partition> part, Sampler f);
    static GridFunction constant(std::shared_ptr<const Partition> part, double v);

    /// Indicator of a cell subset.
    static GridFunction indicator(std::shared_ptr<const Partition> part,
                                  const std::vector<std::size_t>& cells);

    const Partition& partition() const { return *part_; }
    std::shared_ptr<const Partition> partition_ptr() const { return part_; }
    std::span<const double> values() const { return values_; }
    double value(std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }
    double total_measure() const { return part_->total_measure(); }
    const Domain& domain() const { return part_->domain(); }
    bool has_sampler() const { return static_cast<bool>(sampler_); }

    GridFunction refined() const;
    GridFunction refined_toward(std::span<const Point> hints) const;

    /// Pointwise transform; drops the sampler unless `f` is composed in.
    GridFunction transformed(const std::function<double(double)>& f) const;

    /// Pointwise combination with another function on the same partition.
    GridFunction combined(const GridFunction& other,
                          const std::function<double(double, double)>& f) const;

    GridFunction scaled(double c) const;

    /// sum of F(value) * measure in cell order; F = identity by default.
    double integral() const;

  private:
    std::shared_ptr<const Partition> part_;
    std::vector<double> values_;
    Sampler sampler_;
};

/// 1D convenience: x-coordinates of hint points lifted to Points.
std::vector<Point> lift_points_1d(std::span<const double> xs);

} // namespace vexspace

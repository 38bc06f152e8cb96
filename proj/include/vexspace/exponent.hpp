#pragma once

#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <string>

#include "vexspace/geometry.hpp"
#include "vexspace/grid.hpp"

namespace vexspace {

inline constexpr double kCoincidenceTol = 1e-12;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct ExponentBounds {
    double lo = 0.0;
    double hi = 0.0;
    int grid_per_axis = 0; // resolution the bounds were taken over
};

/// A measurable exponent function p(.) on a Domain. Closed-form fields are
/// carried as callables evaluated lazily at cell centers; p-/p+ are computed
/// over an evaluation grid and reported with its resolution.
class ExponentField {
  public:
    using Fn = std::function<double(const Point&)>;

    static ExponentField constant(const Domain& dom, double c);
    static ExponentField make(const Domain& dom, std::string name, Fn f);

    /// Named closed-form families (scenario presets). Scalar params plus an
    /// optional pair of vectors for the "step" family.
    static ExponentField family(const Domain& dom, const std::string& name,
                                const std::map<std::string, double>& params,
                                const std::vector<double>& breaks = {},
                                const std::vector<double>& levels = {});

    /// Grid samples from CSV rows x1,..,xN,value; evaluation picks the
    /// nearest sample (deterministic tie-break on row order).
    static ExponentField from_grid_csv(const Domain& dom, const std::string& path);

    double operator()(const Point& x) const;
    const Domain& domain() const;
    const std::string& name() const;
    bool is_constant() const;
    double constant_value() const; // valid when is_constant()

    ExponentBounds bounds(int grid_per_axis = 0) const;

  private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

struct RatioFields {
    ExponentField r;      // p/q
    ExponentField r_conj; // r/(r-1), +inf where r = 1
    ExponentField s;      // 1/(p-q), +inf where p = q
};

/// p#(x) = N p(x) / (N - p(x)); requires p+ < N over the evaluation grid.
ExponentField sobolev_conjugate(const ExponentField& p, int N);

/// r = p/q, r' = r/(r-1), s = 1/(p-q). The coincidence set {p = q} is
/// detected by |p-q| <= 1e-12 and carried as +inf flags. Rejects any grid
/// point with q > p + 1e-12.
RatioFields ratio_exponents(const ExponentField& p, const ExponentField& q);

/// Smallest empirical log-Holder constant over sampled pairs with
/// 0 < |x-y| <= 1/2: max |p(x)-p(y)| * (-ln|x-y|). Constant fields give 0.
double log_holder_modulus(const ExponentField& p, int samples);

} // namespace vexspace

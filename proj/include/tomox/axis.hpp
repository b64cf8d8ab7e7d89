#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "tomox/errors.hpp"

namespace tomox {

// Uniform 1-D grid: points start + i*step for 0 <= i < count.
struct Axis {
    double start = 0.0;
    double step = 1.0;
    std::int64_t count = 2;

    double at(std::int64_t i) const { return start + step * static_cast<double>(i); }
    double back() const { return at(count - 1); }
    double span() const { return step * static_cast<double>(count - 1); }

    std::vector<double> points() const {
        std::vector<double> p(static_cast<std::size_t>(count));
        for (std::int64_t i = 0; i < count; ++i) p[static_cast<std::size_t>(i)] = at(i);
        return p;
    }

    bool contains(double x, double slack = 0.0) const {
        return x >= start - slack && x <= back() + slack;
    }

    // index of the grid point nearest to x (clamped to range)
    std::int64_t nearest_index(double x) const {
        double u = (x - start) / step;
        auto i = static_cast<std::int64_t>(std::llround(u));
        if (i < 0) i = 0;
        if (i >= count) i = count - 1;
        return i;
    }
};

inline Axis make_axis(double start, double step, std::int64_t count) {
    if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(start))
        throw invalid_argument_error("axis step must be positive and finite");
    if (count < 2) throw invalid_argument_error("axis needs at least 2 points");
    if (!std::isfinite(step * static_cast<double>(count - 1)))
        throw invalid_argument_error("axis span not representable");
    return Axis{start, step, count};
}

inline bool same_axis(const Axis& a, const Axis& b, double tol = 1e-9) {
    return a.count == b.count && std::abs(a.start - b.start) <= tol * std::max(1.0, std::abs(a.start)) &&
           std::abs(a.step - b.step) <= tol * a.step;
}

// Trapezoid quadrature weights for this axis.
inline std::vector<double> trapezoid_weights(const Axis& ax) {
    std::vector<double> w(static_cast<std::size_t>(ax.count), ax.step);
    w.front() *= 0.5;
    w.back() *= 0.5;
    return w;
}

}  // namespace tomox

#include "tomox/interp.hpp"

#include <cmath>
#include <numbers>

namespace tomox {

SincInterpolator::SincInterpolator(const SampledSignal& f) : axis_(f.axis), alt_(f.values) {
    for (std::size_t j = 1; j < alt_.size(); j += 2) alt_[j] = -alt_[j];
}

cd SincInterpolator::operator()(double t) const {
    if (t < axis_.start || t > axis_.back()) return {0.0, 0.0};
    const double u = (t - axis_.start) / axis_.step;
    const double r = u - std::round(u);
    if (std::abs(r) < 1e-9) {
        auto j = static_cast<std::size_t>(std::llround(u));
        cd v = alt_[j];
        return (j & 1u) ? -v : v;
    }
    cd acc{0.0, 0.0};
    for (std::size_t j = 0; j < alt_.size(); ++j)
        acc += alt_[j] / (u - static_cast<double>(j));
    return acc * (std::sin(std::numbers::pi * r) *
                  ((std::llround(u - r) & 1) ? -1.0 : 1.0) / std::numbers::pi);
}

cd linear_value_at(const SampledSignal& f, double t) {
    if (t < f.axis.start || t > f.axis.back()) return {0.0, 0.0};
    const double u = (t - f.axis.start) / f.axis.step;
    auto j = static_cast<std::size_t>(u);
    if (j + 1 >= f.values.size()) return f.values.back();
    const double a = u - static_cast<double>(j);
    return f.values[j] * (1.0 - a) + f.values[j + 1] * a;
}

cd value_at(const SampledSignal& f, double t, Interp method) {
    if (method == Interp::linear) return linear_value_at(f, t);
    return SincInterpolator(f)(t);
}

double catmull_rom(std::span<const double> vals, double x0, double dx, double x) {
    const auto n = static_cast<std::ptrdiff_t>(vals.size());
    const double u = (x - x0) / dx;
    const auto j = static_cast<std::ptrdiff_t>(std::floor(u));
    if (j < 0 || j >= n - 1) {
        if (j == n - 1 && std::abs(u - static_cast<double>(j)) < 1e-12) return vals[n - 1];
        return 0.0;
    }
    const double a = u - static_cast<double>(j);
    if (j == 0 || j >= n - 2)  // linear near the edges
        return vals[j] * (1.0 - a) + vals[j + 1] * a;
    const double p0 = vals[j - 1], p1 = vals[j], p2 = vals[j + 1], p3 = vals[j + 2];
    return p1 + 0.5 * a * (p2 - p0 +
                           a * (2 * p0 - 5 * p1 + 4 * p2 - p3 + a * (3 * (p1 - p2) + p3 - p0)));
}

}  // namespace tomox

#include "tomox/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "tomox/fft.hpp"

namespace tomox {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNuEpsFactor = 1e-6;  // delta-limit switch relative to |(mu,nu)|

void fill_symplectic_row(const SampledSignal& f, const RayParams& ray, const Axis& x_axis,
                         Interp method, std::span<double> row) {
    const double mu = ray.mu, nu = ray.nu;
    const double scale = std::hypot(mu, nu);
    if (scale == 0.0) throw invalid_argument_error("ray (0,0) is not allowed");
    const auto nx = static_cast<std::size_t>(x_axis.count);

    if (std::abs(nu) <= kNuEpsFactor * scale) {
        // delta limit: M(X) = |f(X/mu)|^2 / |mu|
        if (method == Interp::sinc) {
            SincInterpolator interp(f);
            for (std::size_t k = 0; k < nx; ++k)
                row[k] = std::norm(interp(x_axis.at(static_cast<std::int64_t>(k)) / mu)) /
                         std::abs(mu);
        } else {
            for (std::size_t k = 0; k < nx; ++k)
                row[k] = std::norm(linear_value_at(
                             f, x_axis.at(static_cast<std::int64_t>(k)) / mu)) /
                         std::abs(mu);
        }
        return;
    }

    // chirp multiply, then one Fourier integral at frequencies X/nu. The
    // quadratic phase advances by a second-order recurrence, resynced to the
    // exact long-double phase every 64 samples to kill drift.
    const auto n = static_cast<std::size_t>(f.axis.count);
    const double dt = f.axis.step;
    std::vector<cd> g(n);
    const long double chirp_rate = static_cast<long double>(mu) / (2.0L * nu);
    const long double dtl = dt;
    const cd dd = polar_ld(2.0L * chirp_rate * dtl * dtl);
    cd z{1.0, 0.0}, w{1.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        if ((j & 63u) == 0u) {
            const long double t = f.axis.start + dtl * static_cast<long double>(j);
            z = polar_ld(chirp_rate * t * t);
            w = polar_ld(chirp_rate * (2.0L * t * dtl + dtl * dtl));
        }
        g[j] = f.values[j] * z;
        z *= w;
        w *= dd;
    }
    g.front() *= 0.5;
    g.back() *= 0.5;
    for (auto& v : g) v *= dt;
    // G_k = sum_j g_j e^{-i t_j X_k/nu}
    const long double inv_nu = 1.0L / static_cast<long double>(nu);
    auto G = czt(g, nx, -static_cast<long double>(x_axis.step) * dt * inv_nu,
                 -static_cast<long double>(x_axis.start) * dt * inv_nu);
    const double pref = 1.0 / (2.0 * kPi * std::abs(nu));
    for (std::size_t k = 0; k < nx; ++k) row[k] = std::norm(G[k]) * pref;
}

Axis axis_from_sorted_unique(std::vector<double> vals, const char* what) {
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-12; }),
               vals.end());
    if (vals.size() < 2) throw invalid_argument_error(std::string(what) + ": need >= 2 values");
    const double step = (vals.back() - vals.front()) / static_cast<double>(vals.size() - 1);
    for (std::size_t i = 0; i < vals.size(); ++i)
        if (std::abs(vals[i] - (vals.front() + step * static_cast<double>(i))) > 1e-9 * step)
            throw invalid_argument_error(std::string(what) + ": values are not a uniform grid");
    return make_axis(vals.front(), step, static_cast<std::int64_t>(vals.size()));
}

}  // namespace

TomogramField symplectic_tomogram(const SampledSignal& f, const RayParams& ray, const Axis& x_axis,
                                  Interp method) {
    if (f.domain != Domain::time)
        throw domain_tag_error("symplectic_tomogram expects a time-domain signal");
    TomogramField out;
    out.x_axis = x_axis;
    out.family = TomogramFamily::symplectic;
    out.rays = {ray};
    out.values.assign(out.nx(), 0.0);
    fill_symplectic_row(f, ray, x_axis, method, out.row(0));
    return out;
}

TomogramField tomogram_family(const SampledSignal& f, const std::vector<double>& thetas,
                              const Axis& x_axis, Interp method) {
    if (thetas.empty()) throw invalid_argument_error("tomogram_family needs at least one theta");
    TomogramField out;
    out.x_axis = x_axis;
    out.family = TomogramFamily::symplectic;
    out.rays.reserve(thetas.size());
    for (double th : thetas) out.rays.push_back({std::cos(th), std::sin(th)});
    out.values.assign(out.rays.size() * out.nx(), 0.0);
    for (std::size_t r = 0; r < out.rays.size(); ++r)
        fill_symplectic_row(f, out.rays[r], x_axis, method, out.row(r));
    return out;
}

TomogramField symplectic_inversion_data(const SampledSignal& f, const Axis& t_axis,
                                        const Axis& mu_axis, const Axis& x_axis) {
    TomogramField out;
    out.x_axis = x_axis;
    out.family = TomogramFamily::symplectic;
    const auto nt = static_cast<std::size_t>(t_axis.count);
    const auto nm = static_cast<std::size_t>(mu_axis.count);
    out.rays.reserve(nt * nm);
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < nm; ++j) {
            RayParams ray{mu_axis.at(static_cast<std::int64_t>(j)),
                          t_axis.at(static_cast<std::int64_t>(i))};
            if (std::hypot(ray.mu, ray.nu) == 0.0)
                throw invalid_argument_error(
                    "inversion grid hits the (0,0) ray; use an axis without a zero sample");
            out.rays.push_back(ray);
        }
    out.values.assign(out.rays.size() * out.nx(), 0.0);
    for (std::size_t r = 0; r < out.rays.size(); ++r)
        fill_symplectic_row(f, out.rays[r], x_axis, Interp::sinc, out.row(r));
    return out;
}

SampledSignal invert_symplectic(const TomogramField& data) {
    if (data.family != TomogramFamily::symplectic)
        throw domain_tag_error("invert_symplectic expects a symplectic field");

    std::vector<double> nus, mus;
    for (const auto& r : data.rays) {
        nus.push_back(r.nu);
        mus.push_back(r.mu);
    }
    const Axis t_axis = axis_from_sorted_unique(nus, "invert_symplectic nu values");
    const Axis mu_axis = axis_from_sorted_unique(mus, "invert_symplectic mu values");
    const auto nt = static_cast<std::size_t>(t_axis.count);
    const auto nm = static_cast<std::size_t>(mu_axis.count);
    if (data.rays.size() != nt * nm)
        throw invalid_argument_error("invert_symplectic needs a full (mu, nu) rectangle");

    // phase-weighted X integral per row, then the mu integral per time
    const auto wx = trapezoid_weights(data.x_axis);
    std::vector<cd> eix(wx.size());
    for (std::size_t k = 0; k < wx.size(); ++k)
        eix[k] = wx[k] * polar_ld(static_cast<long double>(
                             data.x_axis.at(static_cast<std::int64_t>(k))));

    std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> index;
    for (std::size_t r = 0; r < data.rays.size(); ++r) {
        auto i = t_axis.nearest_index(data.rays[r].nu);
        auto j = mu_axis.nearest_index(data.rays[r].mu);
        index[{i, j}] = r;
    }

    const auto wm = trapezoid_weights(mu_axis);
    std::vector<cd> F(nt);
    for (std::size_t i = 0; i < nt; ++i) {
        const double t = t_axis.at(static_cast<std::int64_t>(i));
        cd acc{0.0, 0.0};
        for (std::size_t j = 0; j < nm; ++j) {
            auto it = index.find({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j)});
            if (it == index.end())
                throw invalid_argument_error("invert_symplectic: missing ray in rectangle");
            auto row = data.row(it->second);
            cd inner{0.0, 0.0};
            for (std::size_t k = 0; k < row.size(); ++k) inner += eix[k] * row[k];
            const double mu = mu_axis.at(static_cast<std::int64_t>(j));
            acc += wm[j] * inner * polar_ld(-static_cast<long double>(mu) * t / 2.0L);
        }
        F[i] = acc / (2.0 * kPi);
    }

    const auto i0 = t_axis.nearest_index(0.0);
    if (std::abs(t_axis.at(i0)) > 1e-9 * t_axis.step + 1e-12)
        throw invalid_argument_error("invert_symplectic: output grid must contain t = 0");
    double fmax = 0.0;
    for (const auto& v : F) fmax = std::max(fmax, std::abs(v));
    const double F0 = F[static_cast<std::size_t>(i0)].real();
    if (!(F0 > 1e-3 * fmax))
        throw ill_conditioned_error("invert_symplectic: |f(0)| too small relative to max |f|");

    SampledSignal out;
    out.axis = t_axis;
    out.domain = Domain::time;
    out.values.resize(nt);
    const double inv = 1.0 / std::sqrt(F0);
    for (std::size_t i = 0; i < nt; ++i) out.values[i] = F[i] * inv;
    return out;
}

TomogramField tomogram_from_wigner(const PhasePlaneField& wv, const RayParams& ray,
                                   const Axis& x_axis) {
    if (wv.kind != PhasePlaneKind::wigner_ville)
        throw domain_tag_error("tomogram_from_wigner expects a wigner_ville field");
    const double mu = ray.mu, nu = ray.nu;
    if (std::hypot(mu, nu) == 0.0) throw invalid_argument_error("ray (0,0) is not allowed");

    TomogramField out;
    out.x_axis = x_axis;
    out.family = TomogramFamily::symplectic;
    out.rays = {ray};
    out.values.assign(out.nx(), 0.0);

    const Axis& taus = wv.axis1;
    const Axis& oms = wv.axis2;
    const auto n_tau = static_cast<std::size_t>(taus.count);
    const auto n_om = static_cast<std::size_t>(oms.count);

    // M(X) = (1/2pi) integral WV along the line X = mu tau + nu omega;
    // integrate over the better-conditioned direction.
    double most_negative = 0.0;
    if (std::abs(nu) >= std::abs(mu)) {
        const auto wq = trapezoid_weights(taus);
        std::vector<double> col(n_om);
        for (std::size_t k = 0; k < out.nx(); ++k) {
            const double X = x_axis.at(static_cast<std::int64_t>(k));
            double acc = 0.0;
            for (std::size_t i = 0; i < n_tau; ++i) {
                const double tau = taus.at(static_cast<std::int64_t>(i));
                for (std::size_t j = 0; j < n_om; ++j) col[j] = wv.at(i, j).real();
                acc += wq[i] * catmull_rom(col, oms.start, oms.step, (X - mu * tau) / nu);
            }
            const double v = acc / (2.0 * kPi * std::abs(nu));
            most_negative = std::min(most_negative, v);
            out.values[k] = std::max(v, 0.0);
        }
    } else {
        const auto wq = trapezoid_weights(oms);
        std::vector<double> rowv(n_tau);
        for (std::size_t k = 0; k < out.nx(); ++k) {
            const double X = x_axis.at(static_cast<std::int64_t>(k));
            double acc = 0.0;
            for (std::size_t j = 0; j < n_om; ++j) {
                const double om = oms.at(static_cast<std::int64_t>(j));
                for (std::size_t i = 0; i < n_tau; ++i) rowv[i] = wv.at(i, j).real();
                acc += wq[j] * catmull_rom(rowv, taus.start, taus.step, (X - nu * om) / mu);
            }
            const double v = acc / (2.0 * kPi * std::abs(mu));
            most_negative = std::min(most_negative, v);
            out.values[k] = std::max(v, 0.0);
        }
    }
    double vmax = 0.0;
    for (double v : out.values) vmax = std::max(vmax, v);
    if (most_negative < -1e-6 * std::max(vmax, 1e-300))
        out.warnings.push_back("truncation-warning: radon row dipped below zero before clipping");
    return out;
}

cd quasidist_from_tomogram(const TomogramField& field, std::size_t row,
                           std::vector<std::string>* warnings) {
    auto r = field.row(row);
    const auto wx = trapezoid_weights(field.x_axis);
    cd acc{0.0, 0.0};
    double mass = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        mass += wx[k] * r[k];
        acc += wx[k] * r[k] *
               polar_ld(static_cast<long double>(field.x_axis.at(static_cast<std::int64_t>(k))));
    }
    if (mass < 0.999 && warnings)
        warnings->push_back("truncation-warning: tomogram row mass " + std::to_string(mass) +
                            " below 0.999");
    return acc;
}

SampledSignal symplectic_eigenfunction(const RayParams& ray, double X, const Axis& axis) {
    const double scale = std::hypot(ray.mu, ray.nu);
    if (scale == 0.0) throw invalid_argument_error("ray (0,0) is not allowed");
    if (std::abs(ray.nu) <= kNuEpsFactor * scale)
        throw invalid_argument_error("eigenfunction needs |nu| away from the delta limit");
    SampledSignal out;
    out.axis = axis;
    out.domain = Domain::time;
    out.values.resize(static_cast<std::size_t>(axis.count));
    const double norm = 1.0 / std::sqrt(2.0 * kPi * std::abs(ray.nu));
    const long double inv_nu = 1.0L / static_cast<long double>(ray.nu);
    for (std::int64_t i = 0; i < axis.count; ++i) {
        const double t = axis.at(i);
        out.values[static_cast<std::size_t>(i)] =
            norm * polar_ld((static_cast<long double>(X) * t -
                             static_cast<long double>(ray.mu) * t * t / 2.0L) *
                            inv_nu);
    }
    return out;
}

}  // namespace tomox

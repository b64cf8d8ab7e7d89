#include "tomox/affine.hpp"

#include <cmath>
#include <numbers>

#include "tomox/fft.hpp"
#include "tomox/interp.hpp"

namespace tomox {

namespace {

constexpr double kPi = std::numbers::pi;

// Samples of the branch integrand on the uniform log grid, before the
// ray-dependent phase: base_sgn(x) = f(sgn e^x) e^{x/2} (time version) or the
// unitary spectrum in place of f (frequency version).
struct MellinWorkspace {
    Axis x_axis;                 // grid in x = log|argument|
    std::vector<double> expx;    // e^{x_l}
    std::vector<cd> base_pos;    // f(+e^x) e^{x/2}
    std::vector<cd> base_neg;    // f(-e^x) e^{x/2}
    cd f0_pos{0.0, 0.0};         // boundary value for the endpoint correction
    cd f0_neg{0.0, 0.0};
    double mass_below_floor = 0.0;
};

MellinWorkspace time_workspace(const SampledSignal& f, const MellinGrid& grid) {
    MellinWorkspace ws;
    ws.x_axis = make_axis(grid.x_min, (grid.x_max - grid.x_min) / static_cast<double>(grid.count - 1),
                          static_cast<std::int64_t>(grid.count));
    const auto n = grid.count;
    ws.expx.resize(n);
    ws.base_pos.resize(n);
    ws.base_neg.resize(n);
    SincInterpolator interp(f);
    for (std::size_t l = 0; l < n; ++l) {
        const double x = ws.x_axis.at(static_cast<std::int64_t>(l));
        const double ex = std::exp(x);
        const double half = std::exp(x / 2.0);
        ws.expx[l] = ex;
        ws.base_pos[l] = interp(ex) * half;
        ws.base_neg[l] = interp(-ex) * half;
    }
    const double eps = std::exp(grid.x_min);
    ws.f0_pos = interp(eps);
    ws.f0_neg = interp(-eps);
    const double n2 = squared_norm(f);
    ws.mass_below_floor =
        (std::norm(ws.f0_pos) + std::norm(ws.f0_neg)) * eps / std::max(n2, 1e-300);
    return ws;
}

MellinWorkspace freq_workspace(const SampledSignal& f, const MellinGrid& grid) {
    MellinWorkspace ws;
    ws.x_axis = make_axis(grid.x_min, (grid.x_max - grid.x_min) / static_cast<double>(grid.count - 1),
                          static_cast<std::int64_t>(grid.count));
    const auto n = grid.count;
    ws.expx.resize(n);
    ws.base_pos.resize(n);
    ws.base_neg.resize(n);

    // unitary spectrum f(w) = (F f)(w)/sqrt(2 pi) at the geometric points +-e^x
    const auto w = trapezoid_weights(f.axis);
    std::vector<cd> weighted(w.size());
    for (std::size_t j = 0; j < w.size(); ++j) weighted[j] = w[j] * f.values[j];
    const double unit = 1.0 / std::sqrt(2.0 * kPi);
    auto spectrum_at = [&](double om) {
        // linear phase over the uniform grid: recurrence with periodic resync
        cd acc{0.0, 0.0};
        const long double oml = om;
        const cd step = polar_ld(-oml * f.axis.step);
        cd z{1.0, 0.0};
        for (std::size_t j = 0; j < weighted.size(); ++j) {
            if ((j & 255u) == 0u)
                z = polar_ld(-oml * (f.axis.start + f.axis.step * static_cast<long double>(j)));
            acc += weighted[j] * z;
            z *= step;
        }
        return acc * unit;
    };
    for (std::size_t l = 0; l < n; ++l) {
        const double x = ws.x_axis.at(static_cast<std::int64_t>(l));
        const double ex = std::exp(x);
        const double half = std::exp(x / 2.0);
        ws.expx[l] = ex;
        ws.base_pos[l] = spectrum_at(ex) * half;
        ws.base_neg[l] = spectrum_at(-ex) * half;
    }
    const double eps = std::exp(grid.x_min);
    ws.f0_pos = spectrum_at(eps);
    ws.f0_neg = spectrum_at(-eps);
    const double n2 = squared_norm(f);
    ws.mass_below_floor =
        (std::norm(ws.f0_pos) + std::norm(ws.f0_neg)) * eps / std::max(n2, 1e-300);
    return ws;
}

// One tomogram row. phase_sign is +1 for the time-scale kernel
// e^{+i mu t/nu} e^{-i (s/nu) log|t|} and -1 for the frequency-scale mirror.
void mellin_row(const MellinWorkspace& ws, double mu, double nu, const Axis& s_axis,
                int phase_sign, std::span<double> row) {
    const auto nx = static_cast<std::size_t>(ws.x_axis.count);
    const auto ns = static_cast<std::size_t>(s_axis.count);
    const double dx = ws.x_axis.step;
    const double sgn_phase = phase_sign >= 0 ? 1.0 : -1.0;
    const double eps = std::exp(ws.x_axis.start);
    const double sqrt_eps = std::sqrt(eps);

    std::fill(row.begin(), row.end(), 0.0);
    std::vector<cd> g(nx);
    for (int branch = 0; branch < 2; ++branch) {
        const bool positive = branch == 0;
        const auto& base = positive ? ws.base_pos : ws.base_neg;
        const double arg_sign = positive ? 1.0 : -1.0;
        const long double rate = static_cast<long double>(sgn_phase * arg_sign * mu / nu);
        for (std::size_t l = 0; l < nx; ++l)
            g[l] = base[l] * polar_ld(rate * ws.expx[l]);
        g.front() *= 0.5;
        g.back() *= 0.5;
        for (auto& v : g) v *= dx;

        // J(s_k) = sum_l g_l e^{-i sign (s_k/nu) x_l} + endpoint tail
        const long double tw =
            -static_cast<long double>(sgn_phase) * s_axis.step * dx / nu;
        const long double ta =
            -static_cast<long double>(sgn_phase) * s_axis.start * dx / nu;
        auto J = czt(g, ns, tw, ta);
        const cd f0 = positive ? ws.f0_pos : ws.f0_neg;
        const double pref = 1.0 / (2.0 * kPi * std::abs(nu));
        for (std::size_t k = 0; k < ns; ++k) {
            const long double lam =
                static_cast<long double>(s_axis.at(static_cast<std::int64_t>(k))) / nu;
            J[k] *= polar_ld(-static_cast<long double>(sgn_phase) * lam * ws.x_axis.start);
            // integral_0^eps t^{-1/2} e^{-i sign lam log t} dt
            const cd denom{0.5, -sgn_phase * static_cast<double>(lam)};
            J[k] += f0 * sqrt_eps *
                    polar_ld(-static_cast<long double>(sgn_phase) * lam * ws.x_axis.start) / denom;
            row[k] += std::norm(J[k]) * pref;
        }
    }
}

TomogramField make_row_field(const AffineParams& params, TomogramFamily family) {
    if (params.nu == 0.0)
        throw invalid_argument_error("affine tomogram needs nu != 0 for the integral branch");
    TomogramField out;
    out.x_axis = params.s_axis;
    out.family = family;
    out.rays = {RayParams{params.mu, params.nu}};
    out.values.assign(out.nx(), 0.0);
    return out;
}

}  // namespace

TomogramField freq_scale_tomogram(const SampledSignal& f, const AffineParams& params,
                                  const MellinGrid& grid) {
    auto out = make_row_field(params, TomogramFamily::freq_scale);
    auto ws = freq_workspace(f, grid);
    mellin_row(ws, params.mu, params.nu, params.s_axis, -1, out.row(0));
    if (ws.mass_below_floor > 1e-3)
        out.warnings.push_back("truncation-warning: spectral mass below the frequency floor");
    return out;
}

TomogramField time_scale_tomogram(const SampledSignal& f, const AffineParams& params,
                                  const MellinGrid& grid) {
    if (f.domain != Domain::time)
        throw domain_tag_error("time_scale_tomogram expects a time-domain signal");
    auto out = make_row_field(params, TomogramFamily::time_scale);
    auto ws = time_workspace(f, grid);
    mellin_row(ws, params.mu, params.nu, params.s_axis, +1, out.row(0));
    if (ws.mass_below_floor > 1e-3)
        out.warnings.push_back("truncation-warning: signal mass below the time floor");
    return out;
}

TomogramField time_scale_inversion_data(const SampledSignal& f, const Axis& mu_axis,
                                        const Axis& s_axis, const MellinGrid& grid) {
    TomogramField out;
    out.x_axis = s_axis;
    out.family = TomogramFamily::time_scale;
    const auto nm = static_cast<std::size_t>(mu_axis.count);
    out.rays.reserve(nm);
    for (std::size_t j = 0; j < nm; ++j)
        out.rays.push_back({mu_axis.at(static_cast<std::int64_t>(j)), 1.0});
    out.values.assign(nm * out.nx(), 0.0);
    auto ws = time_workspace(f, grid);
    for (std::size_t j = 0; j < nm; ++j)
        mellin_row(ws, out.rays[j].mu, 1.0, s_axis, +1, out.row(j));
    return out;
}

SampledSignal invert_time_scale(const TomogramField& data, const Axis& out_axis) {
    if (data.family != TomogramFamily::time_scale)
        throw domain_tag_error("invert_time_scale expects a time_scale field");
    std::vector<double> mus;
    for (const auto& r : data.rays) {
        if (std::abs(r.nu - 1.0) > 1e-9)
            throw invalid_argument_error("invert_time_scale needs all rays at nu = 1");
        mus.push_back(r.mu);
    }
    if (mus.size() < 2) throw invalid_argument_error("invert_time_scale needs a dense mu grid");

    // s-characteristic at k = 2 per mu row: C_j = integral M(s, mu_j, 1) e^{2is} ds
    const auto ws = trapezoid_weights(data.x_axis);
    std::vector<cd> eis(ws.size());
    for (std::size_t k = 0; k < ws.size(); ++k)
        eis[k] = ws[k] * polar_ld(2.0L * static_cast<long double>(
                                             data.x_axis.at(static_cast<std::int64_t>(k))));
    std::vector<cd> ck(mus.size());
    for (std::size_t j = 0; j < mus.size(); ++j) {
        auto row = data.row(j);
        cd acc{0.0, 0.0};
        for (std::size_t k = 0; k < row.size(); ++k) acc += eis[k] * row[k];
        ck[j] = acc;
    }

    // mu weights by local spacing (the rays are ordered but need not be an Axis)
    std::vector<double> wm(mus.size(), 0.0);
    for (std::size_t j = 0; j + 1 < mus.size(); ++j) {
        const double h = mus[j + 1] - mus[j];
        if (!(h > 0.0))
            throw invalid_argument_error("invert_time_scale needs strictly increasing mu rays");
        wm[j] += h / 2.0;
        wm[j + 1] += h / 2.0;
    }

    // D(y) = integral C(mu) e^{-i mu y} dmu; the literal reconstruction
    // integral. D(y) = c f(sigma y) f*((sigma-1) y) with sigma = e^2/(e^2-1),
    // so the signal is unwrapped multiplicatively from the t = 0 anchor.
    auto D = [&](double y) {
        cd acc{0.0, 0.0};
        for (std::size_t j = 0; j < mus.size(); ++j)
            acc += wm[j] * ck[j] * polar_ld(-static_cast<long double>(mus[j]) * y);
        return acc;
    };

    const cd D0 = D(0.0);
    if (std::abs(D0) < 1e-6)
        throw ill_conditioned_error("invert_time_scale: normalizer integral is ~ 0");

    const double e2 = std::exp(2.0);
    const double to_product = (e2 - 1.0) * std::exp(-1.0) / (2.0 * kPi);
    auto P = [&](double v) { return D(v * (1.0 - 1.0 / e2)) * to_product; };

    const double p0 = P(0.0).real();
    if (!(p0 > 0.0))
        throw ill_conditioned_error("invert_time_scale: |f(0)|^2 is not positive");
    const double f0 = std::sqrt(p0);

    SampledSignal out;
    out.axis = out_axis;
    out.domain = Domain::time;
    out.values.resize(static_cast<std::size_t>(out_axis.count));
    const double anchor = 0.05;
    for (std::int64_t i = 0; i < out_axis.count; ++i) {
        const double t = out_axis.at(i);
        int depth = 0;
        while (std::abs(t) * std::exp(-2.0 * depth) > anchor) ++depth;
        cd val{f0, 0.0};
        for (int j = depth - 1; j >= 0; --j) {
            const double v = t * std::exp(-2.0 * j);
            cd div = std::conj(val);
            if (std::abs(div) < 1e-12 * f0) div = cd{1e-12 * f0, 0.0};
            val = P(v) / div;
        }
        out.values[static_cast<std::size_t>(i)] = val;
    }
    return out;
}

std::pair<double, double> affine_param_map(double s, double tau) {
    if (!(s > 0.0)) throw invalid_argument_error("affine_param_map needs s > 0");
    const double nu = std::log(s);
    double mu;
    if (std::abs(s - 1.0) < 1e-8) {
        mu = tau * (1.0 - (s - 1.0) / 2.0);  // log s/(s-1) -> 1 at s = 1
    } else {
        mu = tau * nu / (s - 1.0);
    }
    return {mu, nu};
}

std::pair<double, double> affine_param_map_inverse(double mu, double nu) {
    const double s = std::exp(nu);
    double tau;
    if (std::abs(nu) < 1e-8) {
        tau = mu * (1.0 + nu / 2.0 + nu * nu / 12.0);  // (e^nu - 1)/nu series
    } else {
        tau = mu * (s - 1.0) / nu;
    }
    return {s, tau};
}

}  // namespace tomox

#include "tomox/quasidist.hpp"

#include <cmath>
#include <numbers>

#include "tomox/fft.hpp"

namespace tomox {

namespace {

constexpr double kPi = std::numbers::pi;

void check_time_domain(const SampledSignal& f, const char* op) {
    if (f.domain != Domain::time)
        throw domain_tag_error(std::string(op) + " expects a time-domain signal");
}

std::vector<cd> eval_on_grid(const SampledSignal& f, double start, double step, std::size_t count,
                             Interp method) {
    if (method == Interp::sinc) return resample_uniform(f, start, step, count);
    std::vector<cd> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = linear_value_at(f, start + step * static_cast<double>(i));
    return out;
}

void support_warnings(const SampledSignal& f, const Axis& tau_axis, const Axis& omega_axis,
                      std::vector<std::string>& warnings) {
    const double margin = 0.5 * f.axis.span();
    if (tau_axis.start < f.axis.start - margin || tau_axis.back() > f.axis.back() + margin)
        warnings.push_back("truncation-warning: tau axis extends far beyond the signal support");
    const double nyquist = kPi / f.axis.step;
    if (std::max(std::abs(omega_axis.start), std::abs(omega_axis.back())) > nyquist)
        warnings.push_back("truncation-warning: frequency axis exceeds the sampling bandwidth");
}

}  // namespace

PhasePlaneField wigner_ville(const SampledSignal& f, const Axis& tau_axis, const Axis& omega_axis,
                             Interp method) {
    check_time_domain(f, "wigner_ville");
    PhasePlaneField out;
    out.axis1 = tau_axis;
    out.axis2 = omega_axis;
    out.kind = PhasePlaneKind::wigner_ville;
    out.values.assign(out.n1() * out.n2(), cd{0.0, 0.0});
    support_warnings(f, tau_axis, omega_axis, out.warnings);

    // u grid at the signal step; tau +- u/2 then lands on a half-step grid
    // that is resampled once per row.
    const auto n = static_cast<std::size_t>(f.axis.count);
    const double dt = f.axis.step;
    const double U = f.axis.span();
    const std::size_t nu = 2 * n - 1;
    std::vector<cd> prod(nu);
    const auto n_om = out.n2();

    for (std::size_t i = 0; i < out.n1(); ++i) {
        const double tau = tau_axis.at(static_cast<std::int64_t>(i));
        const auto c = eval_on_grid(f, tau - U / 2.0, dt / 2.0, nu, method);
        for (std::size_t l = 0; l < nu; ++l)
            prod[l] = c[l] * std::conj(c[nu - 1 - l]);
        prod.front() *= 0.5;
        prod.back() *= 0.5;
        for (auto& p : prod) p *= dt;
        // row_k = sum_l prod_l e^{-i W_k u_l}, u_l = -U + l dt
        auto row = czt(prod, n_om, -static_cast<long double>(omega_axis.step) * dt,
                       -static_cast<long double>(omega_axis.start) * dt);
        for (std::size_t k = 0; k < n_om; ++k) {
            const long double wk =
                omega_axis.start + omega_axis.step * static_cast<long double>(k);
            out.at(i, k) = row[k] * polar_ld(wk * U);
        }
    }
    return out;
}

PhasePlaneField ambiguity(const SampledSignal& f, const Axis& mu_axis, const Axis& nu_axis,
                          Interp method) {
    check_time_domain(f, "ambiguity");
    PhasePlaneField out;
    out.axis1 = mu_axis;
    out.axis2 = nu_axis;
    out.kind = PhasePlaneKind::ambiguity;
    out.values.assign(out.n1() * out.n2(), cd{0.0, 0.0});
    if (std::max(std::abs(nu_axis.start), std::abs(nu_axis.back())) > 1.5 * f.axis.span())
        out.warnings.push_back("truncation-warning: nu axis extends far beyond the signal support");
    if (std::max(std::abs(mu_axis.start), std::abs(mu_axis.back())) > kPi / f.axis.step)
        out.warnings.push_back("truncation-warning: mu axis exceeds the sampling bandwidth");

    const auto n = static_cast<std::size_t>(f.axis.count);
    const double dt = f.axis.step;
    std::vector<cd> q(n);
    for (std::size_t j = 0; j < out.n2(); ++j) {
        const double nu = nu_axis.at(static_cast<std::int64_t>(j));
        const auto plus = eval_on_grid(f, f.axis.start + nu / 2.0, dt, n, method);
        const auto minus = eval_on_grid(f, f.axis.start - nu / 2.0, dt, n, method);
        for (std::size_t l = 0; l < n; ++l) q[l] = std::conj(minus[l]) * plus[l];
        q.front() *= 0.5;
        q.back() *= 0.5;
        for (auto& v : q) v *= dt;
        auto col = czt(q, out.n1(), static_cast<long double>(mu_axis.step) * dt,
                       static_cast<long double>(mu_axis.start) * dt);
        for (std::size_t i = 0; i < out.n1(); ++i) {
            const long double mk = mu_axis.start + mu_axis.step * static_cast<long double>(i);
            out.at(i, j) = col[i] * polar_ld(mk * f.axis.start);
        }
    }
    return out;
}

cd ambiguity_value(const SampledSignal& f, double mu, double nu, Interp method) {
    check_time_domain(f, "ambiguity");
    const auto n = static_cast<std::size_t>(f.axis.count);
    const double dt = f.axis.step;
    const auto plus = eval_on_grid(f, f.axis.start + nu / 2.0, dt, n, method);
    const auto minus = eval_on_grid(f, f.axis.start - nu / 2.0, dt, n, method);
    const auto w = trapezoid_weights(f.axis);
    cd acc{0.0, 0.0};
    for (std::size_t l = 0; l < n; ++l) {
        const double t = f.axis.at(static_cast<std::int64_t>(l));
        acc += w[l] * std::conj(minus[l]) * plus[l] * polar_ld(static_cast<long double>(mu) * t);
    }
    return acc;
}

cd affine_quasidistribution_value(const SampledSignal& f, double s, double tau, Interp method) {
    if (!(s > 0.0)) throw invalid_argument_error("affine quasidistribution needs s > 0");
    // substitution u = sqrt(s)(t + tau/2):
    //   Q = (1/sqrt s) integral f*(u/s - tau/sqrt s) f(u) du
    const auto n = static_cast<std::size_t>(f.axis.count);
    const double rs = std::sqrt(s);
    const auto scaled =
        eval_on_grid(f, f.axis.start / s - tau / rs, f.axis.step / s, n, method);
    const auto w = trapezoid_weights(f.axis);
    cd acc{0.0, 0.0};
    for (std::size_t l = 0; l < n; ++l) acc += w[l] * std::conj(scaled[l]) * f.values[l];
    return acc / rs;
}

PhasePlaneField affine_quasidistribution(const SampledSignal& f, const Axis& s_axis,
                                         const Axis& tau_axis, Interp method) {
    check_time_domain(f, "affine_quasidistribution");
    if (s_axis.start <= 0.0)
        throw invalid_argument_error("affine quasidistribution s axis must be positive");
    PhasePlaneField out;
    out.axis1 = s_axis;
    out.axis2 = tau_axis;
    out.kind = PhasePlaneKind::affine;
    out.values.assign(out.n1() * out.n2(), cd{0.0, 0.0});
    for (std::size_t i = 0; i < out.n1(); ++i)
        for (std::size_t j = 0; j < out.n2(); ++j)
            out.at(i, j) = affine_quasidistribution_value(
                f, s_axis.at(static_cast<std::int64_t>(i)),
                tau_axis.at(static_cast<std::int64_t>(j)), method);
    return out;
}

cd coherent_state_overlap(const SampledSignal& f, double t, double omega) {
    // <beta|f> with sqrt2 Re b = t, sqrt2 Im b = omega:
    //   pi^(-1/4) e^{i t w/2} integral e^{-(x-t)^2/2} e^{-i w x} f(x) dx
    const auto w = trapezoid_weights(f.axis);
    cd acc{0.0, 0.0};
    for (std::size_t l = 0; l < w.size(); ++l) {
        const double x = f.axis.at(static_cast<std::int64_t>(l));
        acc += w[l] * std::exp(-(x - t) * (x - t) / 2.0) * f.values[l] *
               polar_ld(-static_cast<long double>(omega) * x);
    }
    return std::pow(kPi, -0.25) * acc *
           polar_ld(static_cast<long double>(t) * omega / 2.0L);
}

PhasePlaneField husimi_kano(const SampledSignal& f, const Axis& t_axis, const Axis& omega_axis) {
    check_time_domain(f, "husimi_kano");
    PhasePlaneField out;
    out.axis1 = t_axis;
    out.axis2 = omega_axis;
    out.kind = PhasePlaneKind::husimi;
    out.values.assign(out.n1() * out.n2(), cd{0.0, 0.0});
    if (std::abs(squared_norm(f) - 1.0) > 1e-6)
        out.warnings.push_back("contract-warning: husimi input is not normalized");

    const auto n = static_cast<std::size_t>(f.axis.count);
    std::vector<cd> g(n);
    const auto w = trapezoid_weights(f.axis);
    for (std::size_t i = 0; i < out.n1(); ++i) {
        const double t = t_axis.at(static_cast<std::int64_t>(i));
        for (std::size_t l = 0; l < n; ++l) {
            const double x = f.axis.at(static_cast<std::int64_t>(l));
            g[l] = w[l] * std::exp(-(x - t) * (x - t) / 2.0) * f.values[l];
        }
        // A_k = sum_l g_l e^{-i w_k x_l}; Q = |A|^2 / sqrt(pi)
        auto row = czt(g, out.n2(), -static_cast<long double>(omega_axis.step) * f.axis.step,
                       -static_cast<long double>(omega_axis.start) * f.axis.step);
        for (std::size_t k = 0; k < out.n2(); ++k) {
            // the x0 phase and the t w/2 phase both cancel in the modulus
            out.at(i, k) = cd{std::norm(row[k]) / std::sqrt(kPi), 0.0};
        }
    }
    return out;
}

}  // namespace tomox

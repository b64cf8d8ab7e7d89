#include "tomox/fft.hpp"

#include <cmath>

namespace tomox {

namespace {

constexpr long double kTwoPi = 6.283185307179586476925286766559L;

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace

cd polar_ld(long double phase) {
    long double r = std::fmod(phase, kTwoPi);
    return {static_cast<double>(std::cos(r)), static_cast<double>(std::sin(r))};
}

void fft_pow2(std::vector<cd>& a, bool inverse) {
    const std::size_t n = a.size();
    if (n < 2) return;
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const long double ang = (inverse ? kTwoPi : -kTwoPi) / static_cast<long double>(len);
        const cd wl = polar_ld(ang);
        for (std::size_t i = 0; i < n; i += len) {
            cd w{1.0, 0.0};
            for (std::size_t j = 0; j < len / 2; ++j) {
                cd u = a[i + j];
                cd v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

namespace {

// Precomputed Bluestein tables for one (n, m, theta_w, theta_a). Rows and
// resampling sweeps reuse the same parameters thousands of times, so a small
// thread-local cache pays for itself.
struct CztPlan {
    std::size_t n = 0, m = 0;
    long double tw = 0.0L, ta = 0.0L;
    std::size_t L = 0;
    std::vector<cd> a_chirp;   // e^{i theta_a j + i theta_w j^2/2}
    std::vector<cd> b_fft;     // FFT of the e^{-i theta_w k^2/2} kernel
    std::vector<cd> post;      // e^{i theta_w k^2/2}
};

const CztPlan& czt_plan(std::size_t n, std::size_t m, long double tw, long double ta) {
    constexpr std::size_t kMaxPlans = 24;
    thread_local std::vector<CztPlan> cache;
    thread_local std::size_t next_slot = 0;
    if (cache.capacity() < kMaxPlans) cache.reserve(kMaxPlans);
    for (const auto& p : cache)
        if (p.n == n && p.m == m && p.tw == tw && p.ta == ta) return p;

    CztPlan plan;
    plan.n = n;
    plan.m = m;
    plan.tw = tw;
    plan.ta = ta;
    plan.L = next_pow2(n + m - 1);
    const long double half_w = tw / 2.0L;
    plan.a_chirp.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const long double jj = static_cast<long double>(j);
        plan.a_chirp[j] = polar_ld(ta * jj + half_w * jj * jj);
    }
    plan.b_fft.assign(plan.L, cd{0.0, 0.0});
    for (std::size_t k = 0; k < m; ++k) {
        const long double kk = static_cast<long double>(k);
        plan.b_fft[k] = polar_ld(-half_w * kk * kk);
    }
    for (std::size_t j = 1; j < n; ++j) {
        const long double jj = static_cast<long double>(j);
        plan.b_fft[plan.L - j] = polar_ld(-half_w * jj * jj);
    }
    fft_pow2(plan.b_fft, false);
    plan.post.resize(m);
    const double invL = 1.0 / static_cast<double>(plan.L);
    for (std::size_t k = 0; k < m; ++k) {
        const long double kk = static_cast<long double>(k);
        plan.post[k] = polar_ld(half_w * kk * kk) * invL;
    }

    if (cache.size() < kMaxPlans) {
        cache.push_back(std::move(plan));
        return cache.back();
    }
    cache[next_slot] = std::move(plan);
    const auto& ref = cache[next_slot];
    next_slot = (next_slot + 1) % kMaxPlans;
    return ref;
}

}  // namespace

std::vector<cd> czt(std::span<const cd> x, std::size_t m, long double theta_w,
                    long double theta_a) {
    const std::size_t n = x.size();
    std::vector<cd> out(m, cd{0.0, 0.0});
    if (n == 0 || m == 0) return out;

    // Bluestein: j*k = (j^2 + k^2 - (k-j)^2)/2 turns the chirp sum into a
    // linear convolution with the kernel e^{-i theta_w n^2/2}.
    const CztPlan& plan = czt_plan(n, m, theta_w, theta_a);
    std::vector<cd> a(plan.L, cd{0.0, 0.0});
    for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * plan.a_chirp[j];
    fft_pow2(a, false);
    for (std::size_t i = 0; i < plan.L; ++i) a[i] *= plan.b_fft[i];
    fft_pow2(a, true);
    for (std::size_t k = 0; k < m; ++k) out[k] = a[k] * plan.post[k];
    return out;
}

std::vector<cd> fourier_integral(std::span<const cd> values, const Axis& t_axis, int sign,
                                 const Axis& out_axis) {
    const auto n = static_cast<std::size_t>(t_axis.count);
    if (values.size() != n) throw invalid_argument_error("value count does not match axis");
    const double sgn = sign >= 0 ? 1.0 : -1.0;

    std::vector<cd> g(values.begin(), values.end());
    g.front() *= 0.5;
    g.back() *= 0.5;
    for (auto& v : g) v *= t_axis.step;

    // sum_j g_j e^{i s w_k t_j} = e^{i s w_k t0} sum_j g_j e^{i s (w0 + k dw) j dt}
    const long double theta_a = static_cast<long double>(sgn) * out_axis.start * t_axis.step;
    const long double theta_w = static_cast<long double>(sgn) * out_axis.step * t_axis.step;
    auto res = czt(g, static_cast<std::size_t>(out_axis.count), theta_w, theta_a);
    for (std::size_t k = 0; k < res.size(); ++k) {
        const long double wk = out_axis.start + out_axis.step * static_cast<long double>(k);
        res[k] *= polar_ld(static_cast<long double>(sgn) * wk * t_axis.start);
    }
    return res;
}

std::vector<cd> resample_uniform(const SampledSignal& f, double start, double step,
                                 std::size_t count) {
    const auto n = static_cast<std::size_t>(f.axis.count);
    const double dt = f.axis.step;
    const std::size_t m = 2 * n;
    const long double dw = kTwoPi / (static_cast<long double>(m) * dt);

    // S_r = sum_j f_j e^{-i w_r t_j}, w_r = -pi/dt + r dw (full period, so the
    // rectangle rule periodizes exactly).
    constexpr long double kPiL = 3.14159265358979323846264338328L;
    std::vector<cd> s = czt(f.values, m, -dw * dt, kPiL);  // e^{+i pi j}
    {
        // fold in e^{-i w_r t0} and the shift to the target origin e^{i w_r a};
        // the phase is linear in r, so a unit-modulus recurrence suffices
        const long double c = start - f.axis.start;
        cd z = polar_ld(-kPiL / dt * c);
        const cd wstep = polar_ld(dw * c);
        for (std::size_t r = 0; r < m; ++r) {
            s[r] *= z;
            z *= wstep;
            if ((r & 255u) == 255u) z /= std::abs(z);
        }
    }
    // f(a + p h) = (1/m) sum_r s_r e^{i w_r p h}
    std::vector<cd> out = czt(s, count, dw * step, 0.0L);
    const double lo = f.axis.start - 1e-12 * dt;
    const double hi = f.axis.back() + 1e-12 * dt;
    const double invm = 1.0 / static_cast<double>(m);
    cd z = {invm, 0.0};
    const cd zstep = polar_ld(-kPiL * step / dt);
    for (std::size_t p = 0; p < count; ++p) {
        const double tp = start + step * static_cast<double>(p);
        out[p] = (tp < lo || tp > hi) ? cd{0.0, 0.0} : out[p] * z;
        z *= zstep;
        if ((p & 255u) == 255u) z *= invm / std::abs(z);
    }
    return out;
}

}  // namespace tomox

#include "tomox/signal.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "tomox/fft.hpp"

namespace tomox {

namespace {

constexpr double kPi = std::numbers::pi;

cd sample_kind(const SignalKind& k, double t) {
    const double env = std::exp(-t * t / 2.0);
    switch (k.tag) {
        case SignalKind::Tag::gaussian:
            return {env, 0.0};
        case SignalKind::Tag::gabor_wavelet:
            return std::pow(kPi, -0.5) * env * polar_ld(static_cast<long double>(k.p1) * t);
        case SignalKind::Tag::mexican_hat:
            return {(1.0 - t * t) * env, 0.0};
        case SignalKind::Tag::chirp:
            return env * polar_ld(static_cast<long double>(k.p1) * t * t / 2.0L +
                                  static_cast<long double>(k.p2) * t);
        case SignalKind::Tag::two_tone:
            return env * (polar_ld(static_cast<long double>(k.p1) * t) +
                          polar_ld(static_cast<long double>(k.p2) * t));
    }
    return {0.0, 0.0};
}

}  // namespace

std::string SignalKind::name() const {
    std::ostringstream os;
    switch (tag) {
        case Tag::gaussian: return "gaussian";
        case Tag::mexican_hat: return "mexican_hat";
        case Tag::gabor_wavelet: os << "gabor:" << p1; return os.str();
        case Tag::chirp: os << "chirp:" << p1 << "," << p2; return os.str();
        case Tag::two_tone: os << "two_tone:" << p1 << "," << p2; return os.str();
    }
    return "?";
}

SignalKind parse_signal_kind(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos) {
        std::string rest = text.substr(colon + 1);
        std::replace(rest.begin(), rest.end(), ',', ' ');
        std::istringstream is(rest);
        double v;
        while (is >> v) args.push_back(v);
    }
    auto want = [&](std::size_t n) {
        if (args.size() != n)
            throw invalid_argument_error("signal kind '" + head + "' expects " +
                                         std::to_string(n) + " parameter(s)");
    };
    if (head == "gaussian") { want(0); return SignalKind::gaussian(); }
    if (head == "mexican_hat" || head == "mexhat") { want(0); return SignalKind::mexican_hat(); }
    if (head == "gabor" || head == "gabor_wavelet") { want(1); return SignalKind::gabor_wavelet(args[0]); }
    if (head == "chirp") { want(2); return SignalKind::chirp(args[0], args[1]); }
    if (head == "two_tone") { want(2); return SignalKind::two_tone(args[0], args[1]); }
    throw invalid_argument_error("unknown signal kind '" + text + "'");
}

SampledSignal synthesize(const SignalKind& kind, const Axis& axis, bool normalize_flag) {
    SampledSignal out;
    out.axis = make_axis(axis.start, axis.step, axis.count);
    out.values.resize(static_cast<std::size_t>(axis.count));
    for (std::int64_t i = 0; i < axis.count; ++i)
        out.values[static_cast<std::size_t>(i)] = sample_kind(kind, axis.at(i));
    if (normalize_flag) out = normalize(out);
    return out;
}

cd inner_product(const SampledSignal& f, const SampledSignal& g) {
    if (!same_axis(f.axis, g.axis) || f.domain != g.domain)
        throw incompatible_grids_error("inner_product requires identical axes and domains");
    const auto w = trapezoid_weights(f.axis);
    cd acc{0.0, 0.0};
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * std::conj(f.values[i]) * g.values[i];
    return acc;
}

double squared_norm(const SampledSignal& f) {
    const auto w = trapezoid_weights(f.axis);
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) acc += w[i] * std::norm(f.values[i]);
    return acc;
}

SampledSignal normalize(const SampledSignal& f) {
    const double n2 = squared_norm(f);
    if (!(n2 > 0.0)) throw degenerate_input_error("cannot normalize a zero signal");
    SampledSignal out = f;
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& v : out.values) v *= inv;
    return out;
}

SampledSignal fourier_transform(const SampledSignal& f, const Axis& out_axis) {
    if (f.domain != Domain::time)
        throw domain_tag_error("fourier_transform expects a time-domain signal");
    SampledSignal out;
    out.axis = make_axis(out_axis.start, out_axis.step, out_axis.count);
    out.values = fourier_integral(f.values, f.axis, -1, out_axis);
    out.domain = Domain::frequency;
    return out;
}

double phase_aligned_rel_l2(const SampledSignal& reference, const SampledSignal& candidate) {
    if (!same_axis(reference.axis, candidate.axis))
        throw incompatible_grids_error("rel-l2 comparison requires one axis");
    const auto w = trapezoid_weights(reference.axis);
    cd cross{0.0, 0.0};
    double ref2 = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        cross += w[i] * std::conj(candidate.values[i]) * reference.values[i];
        ref2 += w[i] * std::norm(reference.values[i]);
    }
    cd phase = std::abs(cross) > 0 ? cross / std::abs(cross) : cd{1.0, 0.0};
    double err2 = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i)
        err2 += w[i] * std::norm(reference.values[i] - candidate.values[i] * phase);
    return std::sqrt(err2 / ref2);
}

}  // namespace tomox

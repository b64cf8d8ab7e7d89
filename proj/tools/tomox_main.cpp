// tomox: tomograms, quasidistributions, and wavelet-type transforms of
// sampled signals, plus the self-verification suite.

#include <CLI11.hpp>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include "tomox/affine.hpp"
#include "tomox/fft.hpp"
#include "tomox/io.hpp"
#include "tomox/quasidist.hpp"
#include "tomox/relations.hpp"
#include "tomox/symplectic.hpp"
#include "tomox/verify.hpp"
#include "tomox/wavelet.hpp"

using namespace tomox;

namespace {

FileFormat parse_format(const std::string& f) {
    if (f == "csv") return FileFormat::csv;
    if (f == "bin") return FileFormat::field_binary;
    throw invalid_argument_error("format must be csv or bin");
}

SampledSignal obtain_signal(const std::string& spec, const std::string& grid_spec,
                            bool normalize_it) {
    SampledSignal f;
    if (std::filesystem::exists(spec)) {
        const bool bin = spec.size() > 4 && spec.substr(spec.size() - 4) == ".bin";
        f = load_signal(spec, bin ? FileFormat::field_binary : FileFormat::csv);
    } else {
        f = synthesize(parse_signal_kind(spec), parse_axis_spec(grid_spec));
    }
    return normalize_it ? normalize(f) : f;
}

void report_warnings(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-frequency and time-scale tomograms, quasidistributions, and wavelets"};
    app.require_subcommand(1);

    std::string signal = "gaussian", grid = "-8:0.015625:1025", out_path, format = "bin";
    std::string config_path;
    double tolerance_scale = 1.0;
    bool raw = false;
    app.add_option("--signal", signal, "signal kind (gaussian, gabor:w0, mexican_hat, "
                                       "chirp:a,b, two_tone:w1,w2) or a csv/bin path");
    app.add_option("--grid", grid, "synthesis axis start:step:count");
    app.add_option("--out", out_path, "output file");
    app.add_option("--format", format, "csv or bin");
    app.add_option("--config", config_path, "flat key=value config file");
    app.add_option("--tolerance-scale", tolerance_scale, "multiply all verify tolerances");
    app.add_flag("--raw", raw, "skip input normalization");

    // tomogram
    auto* c_tom = app.add_subcommand("tomogram", "symplectic tomogram family over theta rays");
    std::string thetas_text = "0,0.349,0.698,1.047,1.396,1.745,2.094,2.443,2.793";
    std::string x_spec = "-12:0.05:481";
    c_tom->add_option("--theta", thetas_text, "comma-separated theta list (radians)");
    c_tom->add_option("--x", x_spec, "X axis start:step:count");

    // wigner / ambiguity / affine-q / husimi
    auto* c_wig = app.add_subcommand("wigner", "Wigner-Ville quasidistribution");
    std::string ax1_spec = "-6:0.09375:129", ax2_spec = "-6:0.09375:129";
    c_wig->add_option("--tau", ax1_spec, "tau axis start:step:count");
    c_wig->add_option("--omega", ax2_spec, "omega axis start:step:count");

    auto* c_amb = app.add_subcommand("ambiguity", "ambiguity function");
    std::string mu_spec = "-6:0.09375:129", nu_spec = "-6:0.09375:129";
    c_amb->add_option("--mu", mu_spec, "mu axis");
    c_amb->add_option("--nu", nu_spec, "nu axis");

    auto* c_aff = app.add_subcommand("affine-q", "affine (scale-shift) quasidistribution");
    std::string s_spec = "0.25:0.125:31", tau_spec = "-4:0.25:33";
    c_aff->add_option("--s", s_spec, "scale axis (s > 0)");
    c_aff->add_option("--tau", tau_spec, "shift axis");

    auto* c_hus = app.add_subcommand("husimi", "Husimi-Kano function");
    std::string ht_spec = "-4:0.125:65", hw_spec = "-4:0.125:65";
    c_hus->add_option("--t", ht_spec, "time axis");
    c_hus->add_option("--omega", hw_spec, "frequency axis");

    // cwt / icwt
    auto* c_cwt = app.add_subcommand("cwt", "continuous wavelet transform");
    std::string mother = "mexican_hat", cw_tau = "-8:0.0625:257";
    double smin = 1.0 / 16.0, smax = 16.0;
    std::size_t nscales = 64;
    c_cwt->add_option("--mother", mother, "mother wavelet kind");
    c_cwt->add_option("--smin", smin, "smallest scale");
    c_cwt->add_option("--smax", smax, "largest scale");
    c_cwt->add_option("--scales", nscales, "number of log-spaced scales");
    c_cwt->add_option("--tau", cw_tau, "shift axis");

    auto* c_icwt = app.add_subcommand("icwt", "inverse continuous wavelet transform");
    std::string icwt_in, icwt_t = "-8:0.0625:257", icwt_mother = "mexican_hat";
    c_icwt->add_option("--in", icwt_in, "wavelet field (bin)")->required();
    c_icwt->add_option("--t", icwt_t, "output time axis");
    c_icwt->add_option("--mother", icwt_mother, "mother wavelet kind");

    // affine tomograms
    auto* c_atom = app.add_subcommand("affine-tomogram", "time-scale or frequency-scale tomogram");
    std::string family = "time-scale", atom_s = "-40:0.0625:1281";
    double amu = 0.0, anu = 1.0;
    c_atom->add_option("--family", family, "time-scale or freq-scale");
    c_atom->add_option("--mu", amu, "ray mu");
    c_atom->add_option("--nu", anu, "ray nu (nonzero)");
    c_atom->add_option("--s", atom_s, "tomogram variable axis");

    // inversions
    auto* c_inv = app.add_subcommand("invert", "tomographic signal recovery round trip");
    std::string method = "symplectic", inv_t = "-8:0.125:129";
    c_inv->add_option("--method", method, "symplectic or time-scale");
    c_inv->add_option("--t", inv_t, "output time axis");

    // photon
    auto* c_pho = app.add_subcommand("photon", "photon-number tomogram");
    std::string beta_text = "1,0";
    int nmax = 40;
    c_pho->add_option("--beta", beta_text, "displacement re[,im]");
    c_pho->add_option("--nmax", nmax, "largest n");

    // verify
    auto* c_ver = app.add_subcommand("verify", "run the full identity suite");
    bool include_timing = false, check_determinism = false;
    c_ver->add_flag("--include-timing", include_timing, "serialize wall times too");
    c_ver->add_flag("--check-determinism", check_determinism, "run twice and compare reports");

    for (auto* sc : app.get_subcommands(nullptr)) sc->fallthrough();
    CLI11_PARSE(app, argc, argv);

    try {
        const FileFormat fmt = parse_format(format);
        auto need_out = [&]() {
            if (out_path.empty()) throw invalid_argument_error("--out is required here");
        };

        if (c_tom->parsed()) {
            auto f = obtain_signal(signal, grid, !raw);
            auto field = tomogram_family(f, parse_list(thetas_text), parse_axis_spec(x_spec));
            report_warnings(field.warnings);
            need_out();
            store_field(field, out_path, fmt);
        } else if (c_wig->parsed()) {
            auto f = obtain_signal(signal, grid, !raw);
            auto field = wigner_ville(f, parse_axis_spec(ax1_spec), parse_axis_spec(ax2_spec));
            report_warnings(field.warnings);
            need_out();
            store_field(field, out_path, fmt);
        } else if (c_amb->parsed()) {
            auto f = obtain_signal(signal, grid, !raw);
            auto field = ambiguity(f, parse_axis_spec(mu_spec), parse_axis_spec(nu_spec));
            report_warnings(field.warnings);
            need_out();
            store_field(field, out_path, fmt);
        } else if (c_aff->parsed()) {
            auto f = obtain_signal(signal, grid, !raw);
            auto field =
                affine_quasidistribution(f, parse_axis_spec(s_spec), parse_axis_spec(tau_spec));
            report_warnings(field.warnings);
            need_out();
            store_field(field, out_path, fmt);
        } else if (c_hus->parsed()) {
            auto f = obtain_signal(signal, grid, !raw);
            auto field = husimi_kano(f, parse_axis_spec(ht_spec), parse_axis_spec(hw_spec));
            report_warnings(field.warnings);
            need_out();
            store_field(field, out_path, fmt);
        } else if (c_cwt->parsed()) {
            auto f = obtain_signal(signal, grid, !raw);
            auto h = normalize(synthesize(parse_signal_kind(mother), f.axis));
            auto field = cwt(f, h, ScaleGrid{smin, smax, nscales}, parse_axis_spec(cw_tau));
            field.mother = parse_signal_kind(mother);
            report_warnings(field.warnings);
            need_out();
            store_field(field, out_path, fmt);
        } else if (c_icwt->parsed()) {
            auto any = load_field(icwt_in);
            auto* field = std::get_if<WaveletField>(&any);
            if (!field) throw format_error("--in does not hold a wavelet field");
            const Axis out_axis = parse_axis_spec(icwt_t);
            auto h = normalize(synthesize(parse_signal_kind(icwt_mother),
                                          parse_axis_spec(grid)));
            auto rec = icwt(*field, h, out_axis);
            report_warnings(rec.warnings);
            need_out();
            store_signal(rec, out_path, fmt);
        } else if (c_atom->parsed()) {
            auto f = obtain_signal(signal, grid, !raw);
            AffineParams params{amu, anu, parse_axis_spec(atom_s)};
            auto field = family == "freq-scale" ? freq_scale_tomogram(f, params)
                                                : time_scale_tomogram(f, params);
            report_warnings(field.warnings);
            need_out();
            store_field(field, out_path, fmt);
        } else if (c_inv->parsed()) {
            auto f = obtain_signal(signal, grid, !raw);
            const Axis out_axis = parse_axis_spec(inv_t);
            SampledSignal rec;
            if (method == "time-scale") {
                auto data = time_scale_inversion_data(f, make_axis(-12.0, 0.1, 241),
                                                      make_axis(-40.0, 0.0625, 1281));
                rec = invert_time_scale(data, out_axis);
            } else {
                auto data = symplectic_inversion_data(f, out_axis,
                                                      make_axis(-8.9375, 0.125, 144),
                                                      make_axis(-40.0, 0.125, 641));
                rec = invert_symplectic(data);
            }
            SampledSignal ref;
            ref.axis = rec.axis;
            ref.values = resample_uniform(f, rec.axis.start, rec.axis.step,
                                          static_cast<std::size_t>(rec.axis.count));
            std::printf("round-trip rel-L2 after phase alignment: %.4g\n",
                        phase_aligned_rel_l2(ref, rec));
            if (!out_path.empty()) store_signal(rec, out_path, fmt);
        } else if (c_pho->parsed()) {
            auto f = obtain_signal(signal, grid, !raw);
            auto parts = parse_list(beta_text);
            const cd beta{parts.empty() ? 0.0 : parts[0], parts.size() > 1 ? parts[1] : 0.0};
            auto w = photon_number_tomogram(f, beta, nmax);
            std::ostringstream os;
            os << "n,w\n";
            for (std::size_t n = 0; n < w.probs.size(); ++n)
                os << n << ',' << format_double(w.probs[n]) << '\n';
            if (out_path.empty()) {
                std::cout << os.str();
            } else {
                std::ofstream f_out(out_path);
                if (!f_out) throw io_error("cannot open '" + out_path + "'");
                f_out << os.str();
            }
        } else if (c_ver->parsed()) {
            Config cfg;
            if (!config_path.empty()) cfg = Config::from_file(config_path);
            if (tolerance_scale != 1.0)
                cfg.set("tolerance_scale", format_double(tolerance_scale));
            auto report = run_verify(cfg);
            for (const auto& c : report.checks)
                std::printf("%-4s %-38s residual %.3e tolerance %.3e\n",
                            c.passed ? "PASS" : "FAIL", c.name.c_str(), c.residual,
                            c.tolerance);
            bool ok = report.all_passed();
            if (check_determinism) {
                auto again = run_verify(cfg);
                const bool same = serialize_report(report) == serialize_report(again);
                std::printf("%-4s determinism (byte-identical reports)\n",
                            same ? "PASS" : "FAIL");
                ok = ok && same;
            }
            std::printf("%zu checks, %s, wall %.1fs\n", report.checks.size(),
                        ok ? "all passed" : "FAILURES", report.wall_seconds);
            if (!out_path.empty()) {
                std::ofstream f_out(out_path);
                if (!f_out) throw io_error("cannot open '" + out_path + "'");
                f_out << serialize_report(report, include_timing);
            }
            return ok ? 0 : 1;
        }
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

#include "tomox/io.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

namespace tomox {

namespace {

void write_raw(std::ofstream& os, const void* p, std::size_t n) {
    os.write(static_cast<const char*>(p), static_cast<std::streamsize>(n));
    if (!os) throw io_error("write failed");
}

void read_raw(std::ifstream& is, void* p, std::size_t n) {
    is.read(static_cast<char*>(p), static_cast<std::streamsize>(n));
    if (is.gcount() != static_cast<std::streamsize>(n)) throw format_error("unexpected end of file");
}

void write_axis(std::ofstream& os, const Axis& a) {
    std::uint64_t c = static_cast<std::uint64_t>(a.count);
    write_raw(os, &a.start, 8);
    write_raw(os, &a.step, 8);
    write_raw(os, &c, 8);
}

Axis read_axis(std::ifstream& is) {
    double start, step;
    std::uint64_t count;
    read_raw(is, &start, 8);
    read_raw(is, &step, 8);
    read_raw(is, &count, 8);
    if (!(step > 0.0) || count < 1) throw format_error("corrupt axis descriptor");
    Axis a{start, step, static_cast<std::int64_t>(count)};
    return a;
}

std::ofstream open_out(const std::string& path, bool binary) {
    std::ofstream os(path, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
    if (!os) throw io_error("cannot open '" + path + "' for writing");
    return os;
}

std::ifstream open_in(const std::string& path, bool binary) {
    std::ifstream is(path, binary ? std::ios::binary : std::ios::in);
    if (!is) throw io_error("cannot open '" + path + "' for reading");
    return is;
}

void write_header(std::ofstream& os, FieldKind kind, bool complex_values, const Axis& a1,
                  const Axis& a2, const std::vector<double>& aux) {
    write_raw(os, FieldFileHeader::magic, 6);
    std::uint8_t k = static_cast<std::uint8_t>(kind);
    std::uint8_t c = complex_values ? 1 : 0;
    write_raw(os, &k, 1);
    write_raw(os, &c, 1);
    write_axis(os, a1);
    write_axis(os, a2);
    std::uint64_t na = aux.size();
    write_raw(os, &na, 8);
    if (na) write_raw(os, aux.data(), 8 * na);
}

struct RawField {
    FieldKind kind;
    bool complex_values;
    Axis axis1, axis2;
    std::vector<double> aux;
    std::vector<double> payload;  // re or (re, im) pairs, row-major
};

RawField read_container(const std::string& path) {
    auto is = open_in(path, true);
    char magic[6];
    read_raw(is, magic, 6);
    if (std::memcmp(magic, FieldFileHeader::magic, 6) != 0)
        throw format_error("bad magic; not a TOMOX1 field file");
    RawField out;
    std::uint8_t k, c;
    read_raw(is, &k, 1);
    read_raw(is, &c, 1);
    out.kind = static_cast<FieldKind>(k);
    out.complex_values = c != 0;
    out.axis1 = read_axis(is);
    out.axis2 = read_axis(is);
    std::uint64_t na;
    read_raw(is, &na, 8);
    out.aux.resize(na);
    if (na) read_raw(is, out.aux.data(), 8 * na);
    const std::size_t n = static_cast<std::size_t>(out.axis1.count) *
                          static_cast<std::size_t>(out.axis2.count) *
                          (out.complex_values ? 2 : 1);
    out.payload.resize(n);
    read_raw(is, out.payload.data(), 8 * n);
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

SampledSignal load_signal(const std::string& path, FileFormat format) {
    if (format == FileFormat::field_binary) {
        auto raw = read_container(path);
        if (raw.kind != FieldKind::signal || !raw.complex_values)
            throw format_error("file does not hold a signal");
        SampledSignal f;
        f.axis = raw.axis1;
        f.domain = (!raw.aux.empty() && raw.aux[0] != 0.0) ? Domain::frequency : Domain::time;
        const auto n = static_cast<std::size_t>(raw.axis1.count);
        f.values.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            f.values[i] = cd{raw.payload[2 * i], raw.payload[2 * i + 1]};
        return f;
    }

    auto is = open_in(path, false);
    std::string line;
    if (!std::getline(is, line)) throw format_error("empty csv");
    {
        std::istringstream hs(line);
        std::string c0, c1, c2;
        std::getline(hs, c0, ',');
        std::getline(hs, c1, ',');
        if (!std::getline(hs, c2, ',')) throw format_error("csv needs a 't,re,im' header row");
    }
    std::vector<double> t;
    std::vector<cd> v;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        double cols[3];
        for (int c = 0; c < 3; ++c) {
            if (!std::getline(ls, cell, ','))
                throw format_error("csv line " + std::to_string(line_no) + ": expected 3 columns");
            try {
                cols[c] = std::stod(cell);
            } catch (const std::exception&) {
                throw format_error("csv line " + std::to_string(line_no) + ": bad number '" +
                                   cell + "'");
            }
        }
        t.push_back(cols[0]);
        v.push_back(cd{cols[1], cols[2]});
    }
    if (t.size() < 2) throw format_error("csv needs at least 2 samples");
    const double step = (t.back() - t.front()) / static_cast<double>(t.size() - 1);
    if (!(step > 0.0)) throw grid_error("time column must be increasing");
    for (std::size_t i = 0; i < t.size(); ++i)
        if (std::abs(t[i] - (t.front() + step * static_cast<double>(i))) > 1e-9 * step)
            throw grid_error("non-uniform sample spacing at row " + std::to_string(i + 2));
    SampledSignal f;
    f.axis = make_axis(t.front(), step, static_cast<std::int64_t>(t.size()));
    f.values = std::move(v);
    return f;
}

void store_signal(const SampledSignal& f, const std::string& path, FileFormat format) {
    if (format == FileFormat::field_binary) {
        auto os = open_out(path, true);
        Axis unit{0.0, 1.0, 1};
        write_header(os, FieldKind::signal, true, f.axis, unit,
                     {f.domain == Domain::frequency ? 1.0 : 0.0});
        std::vector<double> payload(2 * f.values.size());
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            payload[2 * i] = f.values[i].real();
            payload[2 * i + 1] = f.values[i].imag();
        }
        write_raw(os, payload.data(), 8 * payload.size());
        return;
    }
    auto os = open_out(path, false);
    os << "t,re,im\n";
    for (std::size_t i = 0; i < f.values.size(); ++i)
        os << format_double(f.axis.at(static_cast<std::int64_t>(i))) << ','
           << format_double(f.values[i].real()) << ',' << format_double(f.values[i].imag())
           << '\n';
    if (!os) throw io_error("write failed");
}

void store_field(const TomogramField& f, const std::string& path, FileFormat format) {
    FieldKind kind = FieldKind::tomogram_symplectic;
    if (f.family == TomogramFamily::time_scale) kind = FieldKind::tomogram_time_scale;
    if (f.family == TomogramFamily::freq_scale) kind = FieldKind::tomogram_freq_scale;
    const Axis rows{0.0, 1.0, static_cast<std::int64_t>(f.rays.size())};
    if (format == FileFormat::field_binary) {
        auto os = open_out(path, true);
        std::vector<double> aux;
        aux.reserve(2 * f.rays.size());
        for (const auto& r : f.rays) {
            aux.push_back(r.mu);
            aux.push_back(r.nu);
        }
        write_header(os, kind, false, rows, f.x_axis, aux);
        write_raw(os, f.values.data(), 8 * f.values.size());
        return;
    }
    auto os = open_out(path, false);
    os << "mu,nu,X,M\n";
    for (std::size_t r = 0; r < f.rays.size(); ++r)
        for (std::size_t k = 0; k < f.nx(); ++k)
            os << format_double(f.rays[r].mu) << ',' << format_double(f.rays[r].nu) << ','
               << format_double(f.x_axis.at(static_cast<std::int64_t>(k))) << ','
               << format_double(f.row(r)[k]) << '\n';
    if (!os) throw io_error("write failed");
}

void store_field(const PhasePlaneField& f, const std::string& path, FileFormat format) {
    FieldKind kind = FieldKind::wigner_ville;
    if (f.kind == PhasePlaneKind::ambiguity) kind = FieldKind::ambiguity;
    if (f.kind == PhasePlaneKind::affine) kind = FieldKind::affine_q;
    if (f.kind == PhasePlaneKind::husimi) kind = FieldKind::husimi;
    if (format == FileFormat::field_binary) {
        auto os = open_out(path, true);
        write_header(os, kind, true, f.axis1, f.axis2, {});
        std::vector<double> payload(2 * f.values.size());
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            payload[2 * i] = f.values[i].real();
            payload[2 * i + 1] = f.values[i].imag();
        }
        write_raw(os, payload.data(), 8 * payload.size());
        return;
    }
    auto os = open_out(path, false);
    os << "axis1,axis2,re,im\n";
    for (std::size_t i = 0; i < f.n1(); ++i)
        for (std::size_t j = 0; j < f.n2(); ++j)
            os << format_double(f.axis1.at(static_cast<std::int64_t>(i))) << ','
               << format_double(f.axis2.at(static_cast<std::int64_t>(j))) << ','
               << format_double(f.at(i, j).real()) << ',' << format_double(f.at(i, j).imag())
               << '\n';
    if (!os) throw io_error("write failed");
}

void store_field(const WaveletField& f, const std::string& path, FileFormat format) {
    if (format == FileFormat::field_binary) {
        auto os = open_out(path, true);
        write_header(os, FieldKind::wavelet, true, f.s_axis, f.tau_axis,
                     {f.log_spaced ? 1.0 : 0.0});
        std::vector<double> payload(2 * f.values.size());
        for (std::size_t i = 0; i < f.values.size(); ++i) {
            payload[2 * i] = f.values[i].real();
            payload[2 * i + 1] = f.values[i].imag();
        }
        write_raw(os, payload.data(), 8 * payload.size());
        return;
    }
    auto os = open_out(path, false);
    os << "s,tau,re,im\n";
    for (std::size_t i = 0; i < f.n_scales(); ++i)
        for (std::size_t j = 0; j < f.n_tau(); ++j)
            os << format_double(f.scale(i)) << ','
               << format_double(f.tau_axis.at(static_cast<std::int64_t>(j))) << ','
               << format_double(f.row(i)[j].real()) << ',' << format_double(f.row(i)[j].imag())
               << '\n';
    if (!os) throw io_error("write failed");
}

AnyField load_field(const std::string& path) {
    auto raw = read_container(path);
    switch (raw.kind) {
        case FieldKind::signal: {
            SampledSignal f;
            f.axis = raw.axis1;
            f.domain = (!raw.aux.empty() && raw.aux[0] != 0.0) ? Domain::frequency : Domain::time;
            const auto n = static_cast<std::size_t>(raw.axis1.count);
            f.values.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                f.values[i] = cd{raw.payload[2 * i], raw.payload[2 * i + 1]};
            return f;
        }
        case FieldKind::tomogram_symplectic:
        case FieldKind::tomogram_time_scale:
        case FieldKind::tomogram_freq_scale: {
            TomogramField f;
            f.family = raw.kind == FieldKind::tomogram_time_scale ? TomogramFamily::time_scale
                       : raw.kind == FieldKind::tomogram_freq_scale ? TomogramFamily::freq_scale
                                                                    : TomogramFamily::symplectic;
            f.x_axis = raw.axis2;
            if (raw.aux.size() != 2 * static_cast<std::size_t>(raw.axis1.count))
                throw format_error("tomogram ray block size mismatch");
            for (std::size_t r = 0; r < raw.aux.size() / 2; ++r)
                f.rays.push_back({raw.aux[2 * r], raw.aux[2 * r + 1]});
            f.values = std::move(raw.payload);
            return f;
        }
        case FieldKind::wavelet: {
            WaveletField f;
            f.s_axis = raw.axis1;
            f.tau_axis = raw.axis2;
            f.log_spaced = !raw.aux.empty() && raw.aux[0] != 0.0;
            const auto n = raw.payload.size() / 2;
            f.values.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                f.values[i] = cd{raw.payload[2 * i], raw.payload[2 * i + 1]};
            return f;
        }
        default: {
            PhasePlaneField f;
            f.kind = raw.kind == FieldKind::ambiguity ? PhasePlaneKind::ambiguity
                     : raw.kind == FieldKind::affine_q ? PhasePlaneKind::affine
                     : raw.kind == FieldKind::husimi   ? PhasePlaneKind::husimi
                                                       : PhasePlaneKind::wigner_ville;
            f.axis1 = raw.axis1;
            f.axis2 = raw.axis2;
            const auto n = raw.payload.size() / 2;
            f.values.resize(n);
            for (std::size_t i = 0; i < n; ++i)
                f.values[i] = cd{raw.payload[2 * i], raw.payload[2 * i + 1]};
            return f;
        }
    }
}

Config Config::from_file(const std::string& path) {
    auto is = std::ifstream(path);
    if (!is) throw config_error("cannot open config '" + path + "'");
    Config cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string();
            const auto b = s.find_last_not_of(" \t\r");
            return s.substr(a, b - a + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(line_no) + ": expected key=value");
        cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

void Config::set(const std::string& key, const std::string& value) {
    if (key.empty()) throw config_error("empty config key");
    entries_[key] = value;
}

std::optional<std::string> Config::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

std::string Config::get_or(const std::string& key, const std::string& fallback) const {
    return get(key).value_or(fallback);
}

double Config::get_double(const std::string& key, double fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    try {
        return std::stod(*v);
    } catch (const std::exception&) {
        throw config_error("config key '" + key + "' is not a number: '" + *v + "'");
    }
}

std::int64_t Config::get_int(const std::string& key, std::int64_t fallback) const {
    auto v = get(key);
    if (!v) return fallback;
    try {
        return std::stoll(*v);
    } catch (const std::exception&) {
        throw config_error("config key '" + key + "' is not an integer: '" + *v + "'");
    }
}

Axis parse_axis_spec(const std::string& spec) {
    std::istringstream is(spec);
    std::string a, b, c;
    if (!std::getline(is, a, ':') || !std::getline(is, b, ':') || !std::getline(is, c))
        throw invalid_argument_error("axis spec must be start:step:count");
    try {
        return make_axis(std::stod(a), std::stod(b), std::stoll(c));
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        throw invalid_argument_error("bad axis spec '" + spec + "'");
    }
}

}  // namespace tomox

#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "tomox/field.hpp"

namespace tomox {

enum class FileFormat { csv, field_binary };

// Binary container: magic "TOMOX1", one byte of kind, one of value layout,
// two axis descriptors, an auxiliary double block (ray parameters), then the
// row-major payload as little-endian 8-byte floats. The header fully
// determines the payload length, and store/load round-trips are bit-exact.
struct FieldFileHeader {
    static constexpr char magic[7] = "TOMOX1";
    std::uint8_t kind = 0;        // FieldKind below
    std::uint8_t complex_values = 0;
    Axis axis1;
    Axis axis2;
    std::uint64_t aux_count = 0;
};

enum class FieldKind : std::uint8_t {
    signal = 0,
    tomogram_symplectic = 1,
    tomogram_time_scale = 2,
    tomogram_freq_scale = 3,
    wigner_ville = 10,
    ambiguity = 11,
    affine_q = 12,
    husimi = 13,
    wavelet = 20,
};

using AnyField = std::variant<SampledSignal, TomogramField, PhasePlaneField, WaveletField>;

// CSV columns: t, re, im with a header row; the axis is inferred and must be
// uniform to 1e-9 * step.
SampledSignal load_signal(const std::string& path, FileFormat format);
void store_signal(const SampledSignal& f, const std::string& path, FileFormat format);

void store_field(const TomogramField& f, const std::string& path, FileFormat format);
void store_field(const PhasePlaneField& f, const std::string& path, FileFormat format);
void store_field(const WaveletField& f, const std::string& path, FileFormat format);

AnyField load_field(const std::string& path);

// Shortest decimal that round-trips the double exactly.
std::string format_double(double v);

// Flat key=value configuration with per-module namespacing, e.g.
// "symplectic.theta_count = 9". '#' starts a comment.
class Config {
  public:
    Config() = default;
    static Config from_file(const std::string& path);
    void set(const std::string& key, const std::string& value);

    std::optional<std::string> get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

  private:
    std::map<std::string, std::string> entries_;
};

// "start:step:count" -> Axis
Axis parse_axis_spec(const std::string& spec);

}  // namespace tomox

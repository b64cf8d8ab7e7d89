#pragma once

#include <stdexcept>
#include <string>

namespace tomox {

// Base class for all library errors. Subclasses mirror the error
// vocabulary used throughout the API documentation; catching
// tomox::error catches everything the library throws on purpose.
class error : public std::runtime_error {
  public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

class invalid_argument_error : public error {
  public:
    explicit invalid_argument_error(const std::string& w) : error("invalid-argument: " + w) {}
};

class incompatible_grids_error : public error {
  public:
    explicit incompatible_grids_error(const std::string& w) : error("incompatible-grids: " + w) {}
};

class domain_tag_error : public error {
  public:
    explicit domain_tag_error(const std::string& w) : error("domain-error: " + w) {}
};

class degenerate_input_error : public error {
  public:
    explicit degenerate_input_error(const std::string& w) : error("degenerate-input: " + w) {}
};

class ill_conditioned_error : public error {
  public:
    explicit ill_conditioned_error(const std::string& w) : error("ill-conditioned-inversion: " + w) {}
};

class non_admissible_wavelet_error : public error {
  public:
    explicit non_admissible_wavelet_error(const std::string& w) : error("non-admissible-wavelet: " + w) {}
};

class format_error : public error {
  public:
    explicit format_error(const std::string& w) : error("format-error: " + w) {}
};

class grid_error : public error {
  public:
    explicit grid_error(const std::string& w) : error("grid-error: " + w) {}
};

class io_error : public error {
  public:
    explicit io_error(const std::string& w) : error("io-error: " + w) {}
};

class config_error : public error {
  public:
    explicit config_error(const std::string& w) : error("config-error: " + w) {}
};

}  // namespace tomox

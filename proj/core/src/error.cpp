#include "frechet/error.hpp"

namespace frechet {

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::kind_mismatch: return "kind_mismatch";
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::invalid_point: return "invalid_point";
    case errc::empty_input: return "empty_input";
    case errc::bad_weights: return "bad_weights";
    case errc::bad_parameter: return "bad_parameter";
    case errc::parse_error: return "parse_error";
    case errc::io_error: return "io_error";
    case errc::unsupported: return "unsupported";
    case errc::config_error: return "config_error";
  }
  return "unknown";
}

}  // namespace frechet

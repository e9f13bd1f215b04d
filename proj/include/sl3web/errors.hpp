#pragma once

#include <stdexcept>

namespace sl3web {

// Malformed input: files, sign strings, CLI payloads.  CLI exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A mathematical consistency check failed at runtime (basis count mismatch,
// degenerate Gram form, missing witness...).  CLI exit code 1.
struct CheckError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace sl3web

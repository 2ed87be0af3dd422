#pragma once

#include <stdexcept>
#include <string>

namespace sumfree {

// Error kinds map onto CLI exit codes: usage/validation -> 2,
// resource caps -> 3, everything else that aborts a run -> 1.
enum class errc {
  invalid_argument,  // bad parameters or malformed input
  precision,         // strictness margin too small for the requested tolerance
  nonconvergence,    // iterative fit did not reach tolerance within the cap
  resource_cap,      // enumeration or memory cap exceeded
  io,                // file or parse failure
  internal           // invariant the implementation itself guarantees was violated
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

inline void require(bool cond, errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::precision: return "precision";
    case errc::nonconvergence: return "nonconvergence";
    case errc::resource_cap: return "resource_cap";
    case errc::io: return "io";
    case errc::internal: return "internal";
  }
  return "unknown";
}

}  // namespace sumfree

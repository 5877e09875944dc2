#pragma once

#include <stdexcept>
#include <string>

namespace trigfield {

/// Failure categories; the CLI maps them onto its exit codes.
enum class ErrorKind {
  kUsage,        // malformed input, precondition violated by the caller
  kComputation,  // the computation itself failed or found no answer
  kCapExceeded,  // a documented size cap was hit
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline Error usage_error(const std::string& what) { return Error(ErrorKind::kUsage, what); }
inline Error computation_error(const std::string& what) { return Error(ErrorKind::kComputation, what); }
inline Error cap_error(const std::string& what) { return Error(ErrorKind::kCapExceeded, what); }

}  // namespace trigfield

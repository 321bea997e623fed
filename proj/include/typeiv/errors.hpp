#pragma once

#include <stdexcept>
#include <string>

namespace typeiv {

enum class ErrorKind {
  MalformedInput,
  UnsupportedInput,
  ClassificationError,
  ImpossibleInput,
  AmbientMismatch,
  NeedsBaseChange,
  NotTypeIV,
  InconsistentSamples,
  NoConvergence,
  OutsideChart,
  Schema,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedInput: return "malformed-input";
    case ErrorKind::UnsupportedInput: return "unsupported-input";
    case ErrorKind::ClassificationError: return "classification-error";
    case ErrorKind::ImpossibleInput: return "impossible-input";
    case ErrorKind::AmbientMismatch: return "ambient-mismatch";
    case ErrorKind::NeedsBaseChange: return "needs-base-change";
    case ErrorKind::NotTypeIV: return "not-type-IV";
    case ErrorKind::InconsistentSamples: return "inconsistent-samples";
    case ErrorKind::NoConvergence: return "no-convergence";
    case ErrorKind::OutsideChart: return "outside-chart";
    case ErrorKind::Schema: return "schema";
  }
  return "unknown";
}

}  // namespace typeiv

#pragma once

#include <stdexcept>
#include <string>

namespace foldhilb {

enum class ErrorKind {
  Validation,
  NotOriginSupported,
  NotFiniteColength,
  ColengthMismatch,
  AmbientMismatch,
  OutsideSimplex,
  NotAVertex,
  Budget,
  Diagnostic,
};

const char* error_kind_name(ErrorKind k);

class HilbError : public std::runtime_error {
 public:
  HilbError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Validation: return "validation";
    case ErrorKind::NotOriginSupported: return "not origin supported";
    case ErrorKind::NotFiniteColength: return "not finite colength";
    case ErrorKind::ColengthMismatch: return "colength mismatch";
    case ErrorKind::AmbientMismatch: return "ambient mismatch";
    case ErrorKind::OutsideSimplex: return "point outside simplex";
    case ErrorKind::NotAVertex: return "not a vertex";
    case ErrorKind::Budget: return "budget exceeded";
    case ErrorKind::Diagnostic: return "diagnostic";
  }
  return "error";
}

}  // namespace foldhilb

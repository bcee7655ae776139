#pragma once
// Single exception type with a machine-readable failure kind.

#include <stdexcept>
#include <string>

namespace silpath {

enum class Errc {
  UnsupportedType,
  DimensionMismatch,
  NotARoot,
  NotARealRoot,
  NotAPetersonRep,
  NotMinimalRep,
  JMismatch,
  NotDecreasing,
  BadCuts,
  NotPetersonRep,
  BadMultiple,
  NotCanonicalForm,
  DataError,
  InvalidPath,
  OutOfDomain,
  ParseError,
  ConfigError,
  BudgetExceeded,
};

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

inline void require(bool ok, Errc c, const std::string& msg) {
  if (!ok) fail(c, msg);
}

}  // namespace silpath

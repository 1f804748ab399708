#pragma once

#include <stdexcept>
#include <string>

namespace richseed {

enum class Errc {
  NotGCM,
  NotSymmetrizable,
  DimensionMismatch,
  FrozenVertex,
  NotFrozen,
  NotInteger,
  MissingVertex,
  MultiplierMismatch,
  UnknownLevel,
  IndexOutOfRange,
  ZeroParameter,
  WrongCell,
  DenominatorZero,
  SingularSamples,
  BadInput,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace richseed

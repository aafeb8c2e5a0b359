#pragma once

#include <stdexcept>
#include <string>

namespace similitude {

enum class Errc {
  InvalidArgument = 1,
  Overflow,
  NotPrime,
  UnsupportedRing,
  ZeroElement,
  RingMismatch,
  UnsupportedOrder,
  NotSubmodule,
  LengthMismatch,
  NonInvertible,
  BadNormalization,
  DomainError,
  CrossCheckFailure,
  BoundExceeded,
  NotASublattice,
  NonSquareIndex,
  NotRepresentable,
  UnknownConstant,
  DegenerateModel,
  Internal,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace similitude

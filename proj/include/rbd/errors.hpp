#pragma once

#include <stdexcept>
#include <string>

namespace rbd {

enum class Errc {
  SingularMatrix,
  NotSymmetric,
  NotSquare,
  DimensionMismatch,
  KernelRankTooHigh,
  NoKernel,
  NotATree,
  NotTreeForm,
  NotNegativeDefinite,
  BadFraction,
  BadSeifertInvariants,
  BadWeights,
  BadLensSpace,
  NotCharacteristic,
  OutsideInitialBox,
  EmptyBox,
  NotSameClass,
  NegativeShift,
  NotAlternating,
  NotDefiniteEitherOrientation,
  NoSelfConjugateBase,
  NotBlowDownable,
  Parse,
  InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), message_(what) {}

  Errc code() const noexcept { return code_; }
  // Text without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

}  // namespace rbd

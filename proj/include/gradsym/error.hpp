#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradsym {

enum class ErrorKind {
  NonPrimeCharacteristic,
  ReducibleModulus,
  DivisionByZero,
  FieldMismatch,
  CharacteristicZero,
  InvalidTable,
  IndexOutOfRange,
  AmbientMismatch,
  DimensionTooLarge,
  SearchSpaceTooLarge,
  OwnerMismatch,
  ValidationError,
  IncompatibleCocycleData,
  NonInvertibleAlpha,
  NotGradedDivisionLike,
  UnsupportedPrime,
  CharacteristicTwo,
  ZeroParameter,
  GroupMismatch,
  NonAbelianGroup,
  RationalsNotSupported,
  NotClosed,
  UnitMissing,
  NotGraded,
  EmptyTraceSpace,
  CharacteristicDividesGroupOrder,
  AsymmetricMu,
  NotNormalized,
  NotInvariant,
  NotAGoodMatrixAlgebra,
  NotDivision,
  ParseError,
  HashMismatch,
  InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gradsym

#include "gradsym/error.hpp"

namespace gradsym {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::CharacteristicZero: return "CharacteristicZero";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::OwnerMismatch: return "OwnerMismatch";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IncompatibleCocycleData: return "IncompatibleCocycleData";
    case ErrorKind::NonInvertibleAlpha: return "NonInvertibleAlpha";
    case ErrorKind::NotGradedDivisionLike: return "NotGradedDivisionLike";
    case ErrorKind::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorKind::CharacteristicTwo: return "CharacteristicTwo";
    case ErrorKind::ZeroParameter: return "ZeroParameter";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::NonAbelianGroup: return "NonAbelianGroup";
    case ErrorKind::RationalsNotSupported: return "RationalsNotSupported";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::UnitMissing: return "UnitMissing";
    case ErrorKind::NotGraded: return "NotGraded";
    case ErrorKind::EmptyTraceSpace: return "EmptyTraceSpace";
    case ErrorKind::CharacteristicDividesGroupOrder: return "CharacteristicDividesGroupOrder";
    case ErrorKind::AsymmetricMu: return "AsymmetricMu";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NotAGoodMatrixAlgebra: return "NotAGoodMatrixAlgebra";
    case ErrorKind::NotDivision: return "NotDivision";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::HashMismatch: return "HashMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace gradsym

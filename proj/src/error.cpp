#include "richseed/error.hpp"

namespace richseed {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotGCM: return "NotGCM";
    case Errc::NotSymmetrizable: return "NotSymmetrizable";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::FrozenVertex: return "FrozenVertex";
    case Errc::NotFrozen: return "NotFrozen";
    case Errc::NotInteger: return "NotInteger";
    case Errc::MissingVertex: return "MissingVertex";
    case Errc::MultiplierMismatch: return "MultiplierMismatch";
    case Errc::UnknownLevel: return "UnknownLevel";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ZeroParameter: return "ZeroParameter";
    case Errc::WrongCell: return "WrongCell";
    case Errc::DenominatorZero: return "DenominatorZero";
    case Errc::SingularSamples: return "SingularSamples";
    case Errc::BadInput: return "BadInput";
  }
  return "Error";
}

}  // namespace richseed

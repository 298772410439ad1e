#include "hololab/error.hpp"

namespace hololab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotFpf: return "NotFpf";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::NotCenterless: return "NotCenterless";
    case ErrorCode::BasisMismatch: return "BasisMismatch";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::TTooSmall: return "TTooSmall";
    case ErrorCode::PTooSmall: return "PTooSmall";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::CertificateFailed: return "CertificateFailed";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NotNormalInNormalizer: return "NotNormalInNormalizer";
    case ErrorCode::Abelian: return "Abelian";
  }
  return "Unknown";
}

}  // namespace hololab

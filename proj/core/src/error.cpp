// SPDX-License-Identifier: Apache-2.0
#include "gretl/error.hpp"

namespace gretl {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::DuplicateClassName: return "DuplicateClassName";
    case ErrorKind::UnknownClass: return "UnknownClass";
    case ErrorKind::AmbiguousRole: return "AmbiguousRole";
    case ErrorKind::InheritanceCycle: return "InheritanceCycle";
    case ErrorKind::AttributeClash: return "AttributeClash";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::DuplicateAttribute: return "DuplicateAttribute";
    case ErrorKind::UnknownAttribute: return "UnknownAttribute";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::AbstractInstantiation: return "AbstractInstantiation";
    case ErrorKind::TypeNonConformance: return "TypeNonConformance";
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::TypeError: return "TypeError";
    case ErrorKind::MapKeyConflict: return "MapKeyConflict";
    case ErrorKind::UnknownType: return "UnknownType";
    case ErrorKind::AmbiguousType: return "AmbiguousType";
    case ErrorKind::NotSingleton: return "NotSingleton";
    case ErrorKind::NotACollection: return "NotACollection";
    case ErrorKind::NotASet: return "NotASet";
    case ErrorKind::NotAMap: return "NotAMap";
    case ErrorKind::NotTripleSet: return "NotTripleSet";
    case ErrorKind::UnknownArchetype: return "UnknownArchetype";
    case ErrorKind::DuplicateArchetype: return "DuplicateArchetype";
    case ErrorKind::DuplicateBinding: return "DuplicateBinding";
    case ErrorKind::UnknownTraceMap: return "UnknownTraceMap";
  }
  return "UnknownError";
}

std::string GretlError::error_line() const {
  std::string loc = "-";
  if (loc_) loc = std::to_string(loc_->line) + ":" + std::to_string(loc_->column);
  return std::string("ERROR ") + error_kind_name(kind_) + " " + loc + " " + what();
}

}  // namespace gretl

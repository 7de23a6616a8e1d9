// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace gretl {

// Every failure the engine can report, across all layers. Each kind maps to
// one token in the CLI's single-line error format.
enum class ErrorKind {
  SyntaxError,
  ParseError,
  ValidationError,
  IoError,
  DuplicateClassName,
  UnknownClass,
  AmbiguousRole,
  InheritanceCycle,
  AttributeClash,
  KindMismatch,
  DuplicateAttribute,
  UnknownAttribute,
  DomainMismatch,
  AbstractInstantiation,
  TypeNonConformance,
  DanglingEndpoint,
  UnboundVariable,
  TypeError,
  MapKeyConflict,
  UnknownType,
  AmbiguousType,
  NotSingleton,
  NotACollection,
  NotASet,
  NotAMap,
  NotTripleSet,
  UnknownArchetype,
  DuplicateArchetype,
  DuplicateBinding,
  UnknownTraceMap,
};

const char* error_kind_name(ErrorKind kind);

struct SourceLoc {
  int line = 0;
  int column = 0;
};

class GretlError : public std::runtime_error {
public:
  GretlError(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  GretlError(ErrorKind kind, std::string message, SourceLoc loc)
      : std::runtime_error(std::move(message)), kind_(kind), loc_(loc) {}

  ErrorKind kind() const { return kind_; }
  const std::optional<SourceLoc>& location() const { return loc_; }
  void set_location(SourceLoc loc) {
    if (!loc_) loc_ = loc;
  }

  // `ERROR <kind> <location> <message>`; location is `line:col` or `-`.
  std::string error_line() const;

private:
  ErrorKind kind_;
  std::optional<SourceLoc> loc_;
};

}  // namespace gretl

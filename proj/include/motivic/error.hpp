#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace motivic {

enum class ErrorKind {
  SpaceMismatch,
  OdotUndecidable,
  DotUndefined,
  UnregisteredProduct,
  MissingTransport,
  NoUnderlyingClass,
  ValidationFailed,
  MissingRestriction,
  UnsupportedShape,
  DescentFailure,
  OrientationMissing,
  ZeroWeight,
  MissingScissorTable,
  UnknownDatum,
  UnknownName,
  Schema,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Every failure the library reports is an Error carrying a kind; callers that
// need to branch (the CLI exit-code map) switch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by gluing when two restricted chart values disagree. Carries both
// rendered normal forms so they can be shown side by side.
class DescentFailure : public Error {
 public:
  DescentFailure(std::string overlap, std::string step, std::string lhs, std::string rhs)
      : Error(ErrorKind::DescentFailure,
              "overlap '" + overlap + "' (" + step + "): " + lhs + "  !=  " + rhs),
        overlap_(std::move(overlap)),
        step_(std::move(step)),
        lhs_(std::move(lhs)),
        rhs_(std::move(rhs)) {}

  const std::string& overlap() const noexcept { return overlap_; }
  const std::string& step() const noexcept { return step_; }
  const std::string& lhs() const noexcept { return lhs_; }
  const std::string& rhs() const noexcept { return rhs_; }

 private:
  std::string overlap_;
  std::string step_;
  std::string lhs_;
  std::string rhs_;
};

}  // namespace motivic

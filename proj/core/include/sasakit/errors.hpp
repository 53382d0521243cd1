#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace sasakit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejection of a list of normals by validate_diagram.
class DiagramError : public Error {
 public:
  enum class Kind {
    kEmpty,
    kDimensionMismatch,
    kNonPrimitiveNormal,
    kRedundantNormal,
    kEmptyInterior,
    kNotStronglyConvex,
  };

  DiagramError(Kind kind, std::optional<std::size_t> index, const std::string& what)
      : Error(what), kind_(kind), index_(index) {}

  Kind kind() const { return kind_; }
  // Zero-based index of the offending normal, when one is to blame.
  std::optional<std::size_t> index() const { return index_; }

 private:
  Kind kind_;
  std::optional<std::size_t> index_;
};

const char* kind_name(DiagramError::Kind kind);

/// Operation called outside its supported shape (wrong rank, wrong normal form, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Failures on the floating-point side.
class NumericError : public Error {
 public:
  enum class Kind {
    kBoundaryOrOutside,
    kUnboundedRegion,
    kInfeasibleSlice,
    kStencilOutsideDomain,
    kNoConvergence,
    kMismatchedDiagrams,
  };

  NumericError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* kind_name(NumericError::Kind kind);

/// Malformed external input (JSON, CLI parameters).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace sasakit

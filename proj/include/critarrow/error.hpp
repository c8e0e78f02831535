#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace critarrow {

enum class Errc {
  DimensionMismatch,
  SingularMatrix,
  ZeroVector,
  NotInCone,
  NotALatticePoint,
  InvalidCone,
  ResourceLimit,
  UnboundedRegion,
  IndexNotInMinimalFace,
  InternalInconsistency,
  NotACritVector,
  NonInteriorW,
  BadParameters,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace critarrow

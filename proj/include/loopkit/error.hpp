#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace loopkit {

enum class Errc {
  NotSquare,
  EntryOutOfRange,
  RowNotPermutation,
  ColNotPermutation,
  NoIdentity,
  OrderMismatch,
  SyntaxError,
  ReservedName,
  UnboundVariable,
  OrderTooLarge,
  NodeLimitExceeded,
  UnknownLaw,
  UnknownTheorem,
  IoError,
  FormatError,
  InvalidArgument,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::EntryOutOfRange: return "EntryOutOfRange";
    case Errc::RowNotPermutation: return "RowNotPermutation";
    case Errc::ColNotPermutation: return "ColNotPermutation";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::OrderMismatch: return "OrderMismatch";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::ReservedName: return "ReservedName";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::NodeLimitExceeded: return "NodeLimitExceeded";
    case Errc::UnknownLaw: return "UnknownLaw";
    case Errc::UnknownTheorem: return "UnknownTheorem";
    case Errc::IoError: return "IoError";
    case Errc::FormatError: return "FormatError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Single exception type for the library. `row`/`col` locate table defects,
/// `position` locates parse errors, `line` locates file errors.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
  std::optional<std::size_t> position;
  std::optional<std::size_t> line;

 private:
  Errc code_;
};

}  // namespace loopkit

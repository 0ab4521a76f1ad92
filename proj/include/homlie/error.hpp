#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homlie {

/// Precondition and contract failures raised by the library. The enumerator
/// names are part of the CLI surface (they are printed verbatim).
enum class Errc {
  DimensionMismatch,
  Singular,
  NotContained,
  NotRegular,
  NotMultiplicative,
  NotHomCochain,
  NotCoboundary,
  NotCommutingWithAlpha,
  NotNijenhuis,
  InvalidRepresentation,
  DegreeOutOfRange,
  ParseError,
};

constexpr std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::Singular: return "Singular";
    case Errc::NotContained: return "NotContained";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotMultiplicative: return "NotMultiplicative";
    case Errc::NotHomCochain: return "NotHomCochain";
    case Errc::NotCoboundary: return "NotCoboundary";
    case Errc::NotCommutingWithAlpha: return "NotCommutingWithAlpha";
    case Errc::NotNijenhuis: return "NotNijenhuis";
    case Errc::InvalidRepresentation: return "InvalidRepresentation";
    case Errc::DegreeOutOfRange: return "DegreeOutOfRange";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace homlie

#pragma once

#include <stdexcept>
#include <string>

namespace lesiondist {

enum class Errc {
  BadMagic,
  UnsupportedVersion,
  Truncated,
  NonFiniteValue,
  IoFailure,
  ParseError,
  DuplicateDot,
  WrongArity,
  OutOfBounds,
  EmptyDotSet,
  DidNotConverge,
  NonPositiveDecay,
  NonPositiveMax,
  NoAnnotations,
  NoImages,
  EmptyCurve,
  PlacementFailure,
  ConfigError,
};

constexpr const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadMagic: return "BadMagic";
    case Errc::UnsupportedVersion: return "UnsupportedVersion";
    case Errc::Truncated: return "Truncated";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::IoFailure: return "IoFailure";
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicateDot: return "DuplicateDot";
    case Errc::WrongArity: return "WrongArity";
    case Errc::OutOfBounds: return "OutOfBounds";
    case Errc::EmptyDotSet: return "EmptyDotSet";
    case Errc::DidNotConverge: return "DidNotConverge";
    case Errc::NonPositiveDecay: return "NonPositiveDecay";
    case Errc::NonPositiveMax: return "NonPositiveMax";
    case Errc::NoAnnotations: return "NoAnnotations";
    case Errc::NoImages: return "NoImages";
    case Errc::EmptyCurve: return "EmptyCurve";
    case Errc::PlacementFailure: return "PlacementFailure";
    case Errc::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

/// All library failures surface as Error; code() identifies the condition.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace lesiondist

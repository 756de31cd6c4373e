#pragma once

#include <stdexcept>
#include <string>

namespace rmi {

// Every failure the library can signal, one enumerator per condition.
// Callers that need to branch on the cause (the CLI maps these to exit
// codes) inspect Error::kind() instead of parsing messages.
enum class ErrorKind {
  // PGM streams
  MalformedHeader,
  TruncatedPayload,
  TrailingData,
  MalformedPayload,
  ValueOutOfRange,
  // geometry and arithmetic preconditions
  ZeroDimension,
  LengthMismatch,
  DimensionMismatch,
  BlockOutOfBounds,
  PixelTooBright,
  NegativePixel,
  InvalidThreshold,
  EmptyInput,
  // key files
  BadMagic,
  MalformedDimensions,
  UnknownMode,
  MalformedSeed,
  MalformedEntry,
  EntryOutOfRange,
  WrongEntryCount,
  // attacks
  InvalidSpec,
  RectOutOfBounds,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace rmi

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cpv {

enum class ErrorKind {
  InvalidArgument,
  InvalidBarcode,
  InvalidModule,
  NonUniqueSnap,
  EmptyHorizon,
  IndexOutOfRange,
  ShapeMismatch,
  TooLarge,
  OnSpectrum,
  InPiSpan,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by library operations. Parse errors come from the
/// text/JSON layer; every other kind signals a violated precondition.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cpv

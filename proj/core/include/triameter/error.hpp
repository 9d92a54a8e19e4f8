#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triameter {

enum class Errc {
  Empty,
  OutOfRange,
  SelfLoop,
  BadChar,
  TruncatedPayload,
  BadHeader,
  SourceParse,
  Disconnected,
  NotBlockGraph,
  NotATree,
  NotAntipodal,
  AmbiguousAntipode,
  BadArity,
  SizeZero,
  BadParams,
  UnknownFixture,
  UnknownName,
  PreconditionFailed,
  TooLarge,
};

std::string_view to_string(Errc code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace triameter

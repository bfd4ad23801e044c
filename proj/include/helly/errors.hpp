#pragma once

#include <stdexcept>
#include <string>

namespace helly {

// Base error for the library. The leading token of what() is stable and is
// what the CLI matches when mapping failures to exit codes.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define HELLY_DEFINE_ERROR(Name)                                              \
  struct Name : Error {                                                       \
    explicit Name(const std::string& detail = std::string())                  \
        : Error(detail.empty() ? std::string(#Name)                           \
                               : std::string(#Name) + ": " + detail) {}       \
  }

HELLY_DEFINE_ERROR(DimensionMismatch);
HELLY_DEFINE_ERROR(InvalidSet);
HELLY_DEFINE_ERROR(ParamOutOfRange);
HELLY_DEFINE_ERROR(EmptyTuple);
HELLY_DEFINE_ERROR(EmptyInstance);
HELLY_DEFINE_ERROR(TupleLargerThanFamily);
HELLY_DEFINE_ERROR(EnumerationTooLarge);
HELLY_DEFINE_ERROR(GroundTruthUnavailable);
HELLY_DEFINE_ERROR(StrictLinearOnly);
HELLY_DEFINE_ERROR(ParseFailure);

#undef HELLY_DEFINE_ERROR

}  // namespace helly

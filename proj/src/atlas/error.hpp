#pragma once

#include <stdexcept>
#include <string>

namespace atlas {

enum class Errc {
  InvalidArgument = 1,
  OutOfRange,
  DegreeMismatch,
  NonPrimitivePoly,
  NotCoprime,
  SamePoint,
  InvalidPermutation,
  DegenerateEmbedding,
  NotClosedSurface,
  TooLarge,
  RankDeficient,
  Timeout,
  BudgetExceeded,
  ConsistencyError,
  IoError,
  ParseError,
};

/// Stable CamelCase name used in machine-readable error records.
const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace atlas

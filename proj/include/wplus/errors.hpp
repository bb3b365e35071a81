#pragma once

#include <stdexcept>
#include <string>

namespace wplus {

// Structured failure codes surfaced by library entry points. Bounded searches
// report inconclusive results as values (Tri::Unknown / std::nullopt), never
// through these.
enum class Errc {
  DiagonalNotTwo,
  PositiveOffDiagonal,
  AsymmetricZero,
  DimensionMismatch,
  NotARealRoot,
  NotAWeylMatrix,
  NotInTitsCone,
  NegativeZeroLevel,
  ParseError,
  RankNotTwo,
  PreconditionViolated,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace wplus

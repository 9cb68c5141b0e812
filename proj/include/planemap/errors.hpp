#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace planemap {

/// Raised by the polynomial / mapping parser. `offset` is the byte position
/// in the input string at which the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) +
                           ": " + message),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// J(F) vanishes identically: the mapping is outside every hypothesis the
/// cusp/node counts rely on. Always an error, never a zero count.
class DegenerateMappingError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An elimination ideal came back zero while the source ideal was not
/// zero-dimensional: the cusp or node locus contains a curve.
class CurveLocusError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Field characteristic is too small for a squarefree-part computation
/// (char <= deg). Signals "prime too small, resample".
class SmallCharacteristicError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// search_generic ran out of candidates. Persistent failure at a reasonable
/// budget indicates an implementation or coefficient-range problem, since
/// generic mappings are Zariski dense.
class BudgetExhaustedError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace planemap

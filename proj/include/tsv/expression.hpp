#pragma once

// Text grammar for algebra elements:
//
//   element := ['-'] term (('+'|'-') term)*
//   term    := [scalar '*'] basis | scalar
//   basis   := ('L'|'Y'|'M') '[' signed-integer ']' | 'C'
//   scalar  := unsigned magnitude ("3/2", "2i", "i") or any scalar in parentheses
//
// Whitespace is insignificant. A bare scalar term is only accepted when it is 0.

#include "tsv/algebra.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tsv {

class SyntaxError : public std::invalid_argument {
  public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string &detail = "");

    std::size_t offset() const { return offset_; }
    const std::vector<std::string> &expected() const { return expected_; }

  private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

Element parse_element(std::string_view src);
BasisVector parse_basis(std::string_view src);

/// Canonical form, e.g. "3/2*L[-1] + (1+2i)*Y[0] - M[3] + C"; "0" for zero.
std::string to_string(const Element &x);
std::string to_string(const BasisVector &b);

} // namespace tsv

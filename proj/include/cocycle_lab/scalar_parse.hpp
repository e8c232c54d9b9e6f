#pragma once

#include <string>
#include <string_view>

#include "cocycle_lab/scalars.hpp"

namespace cocycle_lab {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses expressions such as "-1", "1/2", "i", "-i", "zeta3^2", "2*i", "1+zeta5".
/// Grammar: sums and differences of products; factors are integers, "p/q"
/// rationals, "i", "zetaN", parenthesized expressions, each optionally raised
/// to an integer power with "^".
CycScalar parse_scalar(std::string_view text);

}  // namespace cocycle_lab

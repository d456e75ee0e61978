#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "schub/errors.hpp"

namespace schub {

// Exact arbitrary-precision integer; every coefficient in the library is one
// of these.  No floating point anywhere.
using Integer = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Integer& v) { return v.str(); }

inline Integer parse_integer(const std::string& text) {
  if (text.empty()) throw parse_error("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw parse_error("not a decimal integer: " + text);
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw parse_error("not a decimal integer: " + text);
    }
  }
  return Integer(text);
}

}  // namespace schub

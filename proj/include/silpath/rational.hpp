#pragma once
// Exact rational scalars; thin helpers over boost::rational.

#include <boost/rational.hpp>
#include <string>
#include <string_view>

#include "silpath/error.hpp"

namespace silpath {

using Int = long long;
using Rat = boost::rational<Int>;

inline bool is_integral(const Rat& r) { return r.denominator() == 1; }

inline std::string rat_str(const Rat& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

// Accepts "p" or "p/q" with optional sign, q > 0 after normalization.
inline Rat parse_rat(std::string_view s) {
  auto bad = [&] { fail(Errc::ParseError, "bad rational literal '" + std::string(s) + "'"); };
  if (s.empty()) bad();
  std::size_t slash = s.find('/');
  auto parse_int = [&](std::string_view t) -> Int {
    if (t.empty()) bad();
    std::size_t pos = 0;
    bool neg = t[0] == '-';
    if (neg || t[0] == '+') pos = 1;
    if (pos == t.size()) bad();
    Int v = 0;
    for (; pos < t.size(); ++pos) {
      if (t[pos] < '0' || t[pos] > '9') bad();
      v = v * 10 + (t[pos] - '0');
    }
    return neg ? -v : v;
  };
  Int num = parse_int(s.substr(0, slash));
  Int den = 1;
  if (slash != std::string_view::npos) {
    den = parse_int(s.substr(slash + 1));
    if (den == 0) bad();
  }
  return Rat(num, den);
}

}  // namespace silpath

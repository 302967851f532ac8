#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace floppy {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Representative of r mod m in [0, m).
inline Rat rat_mod(const Rat& r, const Rat& m) {
  Rat q = r / m;
  Int fl = rat_num(q) / rat_den(q);
  if (q < 0 && fl * rat_den(q) != rat_num(q)) fl -= 1;
  return r - Rat(fl) * m;
}

inline Rat mod1(const Rat& r) { return rat_mod(r, Rat(1)); }
inline Rat mod8(const Rat& r) { return rat_mod(r, Rat(8)); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

// Canonical "p/q" rendering; integers render without the denominator.
inline std::string rat_str(const Rat& r) {
  std::string s = rat_num(r).str();
  if (rat_den(r) != 1) s += "/" + rat_den(r).str();
  return s;
}

// Accepts "p" or "p/q", q > 0 after normalization.
inline Rat rat_parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::exception&) {
    throw std::runtime_error("malformed rational: '" + s + "'");
  }
}

}  // namespace floppy

#ifndef TILTN_RATIONAL_HPP
#define TILTN_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace tiltn {

using Rat = mpq_class;
using BigInt = mpz_class;

inline std::string rat_to_string(const Rat &r) {
  return r.get_str();
}

inline Rat rat_from_string(const std::string &s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

} // namespace tiltn

#endif

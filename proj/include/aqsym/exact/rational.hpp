#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aqsym {

/// Exact rational number. GMP keeps it canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }
inline bool is_one(const Rat& r) { return r == 1; }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat parse_rat(std::string_view text) {
  Rat r;
  if (r.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("not a rational: " + std::string(text));
  if (r.get_den() == 0) throw std::domain_error("rational with zero denominator");
  r.canonicalize();
  return r;
}

inline std::size_t hash_value(const Rat& r) {
  std::size_t h = std::hash<std::string>{}(r.get_num().get_str(16));
  return h ^ (std::hash<std::string>{}(r.get_den().get_str(16)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace aqsym

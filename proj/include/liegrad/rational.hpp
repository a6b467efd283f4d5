#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace liegrad {

// Exact scalars. mpq_class keeps itself canonical (reduced, positive
// denominator) after every arithmetic operation.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Canonical num/den; den must be nonzero. Prefer this to Rat(num, den),
/// which does not reduce.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

/// Parses "p", "-p", "p/q". Throws ParseError on malformed input or q == 0.
Rat parse_rat(std::string_view text);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

RatVec to_rat(const IntVec& v);
IntVec zero_int_vec(std::size_t n);
RatVec zero_rat_vec(std::size_t n);
RatVec unit_rat_vec(std::size_t n, std::size_t i);

bool is_zero(const RatVec& v);
bool is_zero(const IntVec& v);

Rat dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rat& s, const RatVec& v);

/// Least common multiple of the denominators.
Int common_denominator(const RatVec& v);

std::string to_string(const IntVec& v);  // "(1,0,-2)"
std::string to_string(const RatVec& v);  // "(1/2,0)"

}  // namespace liegrad

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace tropimpl {

using Int = mpz_class;
using Rat = mpq_class;

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

// Accepts "a", "-a", "a/b"; throws Error(Parse) otherwise.
Rat parse_rat(const std::string& text);
std::string rat_to_string(const Rat& value);  // always "num/den"

Rat make_rat(long num, long den = 1);

Int gcd_of(const IntVector& v);
Int lcm_of_denominators(const RatVector& v);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

// Divide by content; first nonzero entry made positive. Zero vector unchanged.
IntVector canonical_scale(IntVector v);
// Clear denominators then canonical_scale.
IntVector canonical_scale(const RatVector& v);
// Divide by content only (keeps sign); used for rays.
IntVector primitive(IntVector v);

Int dot(const IntVector& a, const IntVector& b);
Rat dot(const IntVector& a, const RatVector& b);
Rat dot(const RatVector& a, const RatVector& b);

RatVector to_rat(const IntVector& v);
// Requires integral entries.
IntVector to_int(const RatVector& v);
bool is_integral(const RatVector& v);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector scale(const IntVector& a, const Int& s);
IntVector negate(IntVector a);
RatVector add(const RatVector& a, const RatVector& b);
RatVector sub(const RatVector& a, const RatVector& b);

IntVector int_vector(std::initializer_list<long> values);
IntVector unit_vector(std::size_t n, std::size_t i);

std::string to_string(const IntVector& v);

// Floor / ceiling of a rational.
Int floor_of(const Rat& r);
Int ceil_of(const Rat& r);

std::int64_t to_int64(const Int& value);

}  // namespace tropimpl

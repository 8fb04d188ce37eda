#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace suffstat {

// Arbitrary-precision integers and rationals. All probability arithmetic in
// this library is exact: rationals are kept reduced with positive
// denominator, and equality between distributions is literal equality.
using Int = mpz_class;
using Rat = mpq_class;

// Library-wide error type. Carrier mismatches, zero-validity conditioning,
// full-support violations and the like all surface as Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// gmpxx has no long long constructors; funnel counts through these.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat to_rat(long long v) { return Rat(static_cast<long>(v)); }

// Reduced rational num/den; den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

Int factorial(long long n);

// n! / (k! (n-k)!) for 0 <= k <= n, else 0.
Int binomial(long long n, long long k);

Int int_pow(const Int& base, long long exp);
Rat rat_pow(const Rat& base, long long exp);

// "p/q" reduced, with "/q" omitted when q == 1.
std::string format_rat(const Rat& r);

// Accepts "p" or "p/q" with optional leading '-'. Throws Error on anything else.
Rat parse_rat(std::string_view text);

}  // namespace suffstat

#pragma once

#include <map>
#include <vector>

#include "suffstat/channel.hpp"
#include "suffstat/dist.hpp"
#include "suffstat/msets.hpp"
#include "suffstat/report.hpp"

namespace suffstat {

// Integer (multiset) partition: positive part value -> positive
// multiplicity. A partition with psum K is an element of MP(K); note that
// its size (number of parts) is generally smaller than its sum.
class Partition {
 public:
  Partition() = default;

  static Partition from_counts(const std::map<long long, long long>& counts);
  static Partition from_value(const Value& v);
  static Partition from_multiset(const Multiset& m);  // integer keys required

  const std::map<long long, long long>& counts() const { return counts_; }
  Value to_value() const;
  Multiset to_multiset() const;
  std::string to_text() const { return to_value().to_text(); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.counts_ == b.counts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.to_value() < b.to_value();
  }

 private:
  std::map<long long, long long> counts_;
};

// Weighted sum of the parts: sum_i sigma(i) * i.
long long psum(const Partition& sigma);

// Number of parts: sum_i sigma(i).
long long psize(const Partition& sigma);

// Product of the parts: prod_i i^sigma(i).
Int maal(const Partition& sigma);

// Product of the factorials of the multiplicities, sigma!.
Int part_facto(const Partition& sigma);

// Multinomial coefficient for partitions: K! / prod_i (i!)^sigma(i),
// K = psum(sigma). Equals mset_coefm of any multiset with this
// multiplicity count.
Int partcoefm(const Partition& sigma);

// All partitions with psum exactly k, ascending canonical order. Counts
// follow the partition numbers 1, 2, 3, 5, 7, 11, ...
std::vector<Partition> enum_partitions(long long k);

// Multiplicity count of a nonempty multiset: how many support elements
// occur how many times.
Partition mc(const Multiset& phi);

// Multiplicity count on multiset values, for use as a statistic.
Value mc_value(const Value& mset);

// Uniform distribution on the multisets over x whose multiplicity count is
// sigma. Requires |x| >= psum(sigma).
Dist stk(const Partition& sigma, const Carrier& x);

// Stack as a channel MP(K) -> M[K](X).
Channel stk_channel(const Carrier& x, long long k);

// Element-permutation channel on M[K](X): stack after multiplicity count.
// Computed both as stk . mc and as the uniform average over carrier
// permutations; the two routes are compared exactly and a mismatch is an
// error.
Channel ep(const Carrier& x, long long k);

// Swapped multinomial: the average of multinomial(omega . pi, k) over all
// permutations pi of the carrier. Requires full support and |supp| >= k.
Dist smn(const Dist& omega, long long k);

// Partition multinomial: the multiplicity-count pushforward of the
// multinomial. Internally cross-checked against the concrete
// coefficient-sum formula and against the pushforward of the swapped
// multinomial.
Dist pamn(const Dist& omega, long long k);

// Checks, for each omega, that multiplicity count is a sufficient statistic
// for the swapped multinomial: permutation invariance of smn and the joint
// state equation through the stack channel.
Report verify_mc_sufficiency(const std::vector<Dist>& omegas, long long k);

}  // namespace suffstat

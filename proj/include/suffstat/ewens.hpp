#pragma once

#include <vector>

#include "suffstat/channel.hpp"
#include "suffstat/dist.hpp"
#include "suffstat/partitions.hpp"
#include "suffstat/report.hpp"

namespace suffstat {

// Reproduction parameter of the Ewens family: a positive rational.
class EwensParam {
 public:
  explicit EwensParam(Rat t);
  const Rat& t() const { return t_; }

 private:
  Rat t_;
};

// Unsigned Stirling number of the first kind, by the recurrence
// [n+1,k] = n [n,k] + [n,k-1] with [0,0] = 1. Out-of-range k gives 0.
Int stirling1(long long n, long long k);

// Ewens distribution on the partitions of k:
// weight(sigma) = (k! / prod_{0<=i<k}(t+i)) * t^size(sigma) / (sigma! maal(sigma)).
Dist ewens_dist(long long k, const EwensParam& t);

// Partition-size distribution on {1..k} with Stirling coefficients:
// weight(j) = [k,j] t^j / prod_{0<=i<k}(t+i).
Dist stirling_dist(long long k, const EwensParam& t);

// Conditional of the Ewens distribution given size n: weights proportional
// to 1 / (sigma! maal(sigma)) on the size-n partitions of k. Parameter-free.
Dist size_dagger(long long k, long long n);

// psize on partition values, for use as a statistic.
Value psize_value(const Value& partition);

// Partition draw-add channel MP(k) -> MP(k+1): add a new unit part with
// probability t/(k+t), otherwise grow an existing part j with probability
// sigma(j) j/(k+t).
Channel pda(long long k, const EwensParam& t);

// Size draw-add channel {1..k} -> {1..k+1}: increment with probability
// t/(k+t), stay with probability k/(k+t).
Channel sda(long long k, const EwensParam& t);

// Checks, for each t: the size pushforward of Ewens is the Stirling
// distribution, the joint state equation through size_dagger, the
// draw-add commuting rectangle, and both inductive reconstructions.
Report verify_size_sufficiency(long long k, const std::vector<EwensParam>& ts);

}  // namespace suffstat

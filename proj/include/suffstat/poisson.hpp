#pragma once

#include <cstdint>
#include <vector>

#include "suffstat/dist.hpp"
#include "suffstat/report.hpp"

namespace suffstat {

// Un-normalized Poisson weight lambda^j / j!. The transcendental normalizer
// e^{-lambda} is left symbolic; it cancels in every identity verified here,
// so all arithmetic stays rational.
Rat pois_weight(const Rat& lambda, long long j);

// Addition statistic on integer tuples.
long long som(const std::vector<long long>& vec);

// som on tuple-of-integer values, for use as a statistic.
Value som_value(const Value& tuple);

// Multinomial splitting of n over k slots:
// weight(j1..jk) = n! / (k^n prod ji!) on the tuples summing to n.
Dist som_dagger(long long n, long long k);

// All k-tuples of nonnegative integers summing to n, ascending order.
std::vector<std::vector<long long>> enum_tuples_with_sum(long long k, long long n);

// Un-normalized k-fold Poisson product truncated to tuples with sum <= bound:
// w(j1..jk) = prod lambda^{ji} / ji!.
class WeightVector {
 public:
  WeightVector(Rat lambda, long long bound, long long arity);

  const Rat& lambda() const { return lambda_; }
  long long bound() const { return bound_; }
  long long arity() const { return arity_; }

  Rat weight(const std::vector<long long>& tuple) const;
  // All tuples in the truncated support, grouped by sum: index n holds
  // som^{-1}(n) for n = 0..bound.
  const std::vector<std::vector<std::vector<long long>>>& levels() const {
    return levels_;
  }

 private:
  Rat lambda_;
  long long bound_;
  long long arity_;
  std::vector<std::vector<std::vector<long long>>> levels_;
};

// Checks, for each lambda: the pushforward identity (the sum of the product
// weights over som^{-1}(n) is (k lambda)^n / n!), that the normalized
// conditional on each level equals som_dagger independently of lambda, and
// the predicate adjointness equation on seeded predicate pairs. All sums are
// un-normalized rational values on the truncated support.
Report verify_sum_sufficiency(long long k, const std::vector<Rat>& lambdas,
                              long long trunc, std::uint64_t seed = 0,
                              int predicate_pairs = 20);

}  // namespace suffstat

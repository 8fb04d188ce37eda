#pragma once

#include <vector>

#include "suffstat/channel.hpp"
#include "suffstat/dist.hpp"
#include "suffstat/msets.hpp"
#include "suffstat/report.hpp"

namespace suffstat {

// All |X|^K tuples over the carrier, lexicographic (= ascending) order.
std::vector<Value> seq_carrier(const Carrier& x, long long k);

// Accumulation on tuple values: (x1,...,xK) -> multiset of entries.
Value acc_value(const Value& tuple);

// K-fold product of omega with itself, over K-tuples.
Dist iid(const Dist& omega, long long k);

// Distribution of multisets of K draws with replacement from omega:
// weight(phi) = coefm(phi) * prod_x omega(x)^phi(x).
Dist multinomial(const Dist& omega, long long k);

// Uniform distribution on the sequences accumulating to phi.
Dist arr(const Multiset& phi);

// Arrangement as a channel M[K](X) -> X^K.
Channel arr_channel(const Carrier& x, long long k);

// Accumulation lifted to a channel X^K -> M[K](X).
Channel acc_channel(const Carrier& x, long long k);

// Tuple-permutation channel on X^K: each tuple goes to the uniform average
// of its K! coordinate permutations.
Channel tp(const Carrier& x, long long k);

// Checks, for each omega, that accumulation is a sufficient statistic for
// the iid channel: permutation invariance of iid, the joint-state equation
// against the multinomial through arrangement, and both marginal identities.
Report verify_acc_sufficiency(const std::vector<Dist>& omegas, long long k);

}  // namespace suffstat

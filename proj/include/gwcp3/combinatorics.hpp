#pragma once

#include "gwcp3/rational.hpp"

namespace gwcp3 {

/// n! via an iterative product over a memoized table. n must be >= 0.
const Int& factorial(int n);

/// Binomial coefficient m!/(k!(m-k)!). Out-of-range arguments (k < 0,
/// k > m, m < 0) evaluate to 0; the relation sums rely on this convention.
Int binom(long long m, long long k);

/// Two-part multinomial m!/(k1! k2! (m-k1-k2)!), zero out of range
/// (including negative lower indices).
Int multinom(long long m, long long k1, long long k2);

}  // namespace gwcp3

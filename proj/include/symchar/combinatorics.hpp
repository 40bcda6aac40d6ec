#pragma once

// Elementary number-theoretic and partition-enumeration helpers.

#include "symchar/partition.hpp"

#include <cstdint>
#include <vector>

namespace symchar {

// All partitions of n in reverse-lexicographic order:
// [n], [n-1,1], ..., [1^n]. partitions_of(0) == {[]}.
std::vector<Partition> partitions_of(int n);

// z_lambda = prod_i m_i(lambda)! * i^{m_i(lambda)}; order of the centralizer
// of a permutation of cycle type lambda.
std::int64_t z_of(const Partition& lambda);

// Number-theoretic Moebius function; r >= 1 required.
int mobius(std::int64_t r);

// Divisors of k in increasing order; k >= 1 required.
std::vector<std::int64_t> divisors(std::int64_t k);

std::int64_t binomial(int n, int k);

}  // namespace symchar

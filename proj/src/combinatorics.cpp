#include "symchar/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace symchar {

namespace {

void emitPartitions(int n, int maxPart, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(n, maxPart); p >= 1; --p) {
        acc.push_back(p);
        emitPartitions(n - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    emitPartitions(n, n, acc, out);
    return out;
}

std::int64_t z_of(const Partition& lambda) {
    std::int64_t z = 1;
    for (auto [part, mult] : lambda.multiplicities()) {
        for (int j = 1; j <= mult; ++j) z *= j;
        for (int j = 0; j < mult; ++j) z *= part;
    }
    return z;
}

int mobius(std::int64_t r) {
    if (r < 1) throw std::invalid_argument("mobius: argument must be >= 1");
    int sign = 1;
    for (std::int64_t p = 2; p * p <= r; ++p) {
        if (r % p == 0) {
            r /= p;
            if (r % p == 0) return 0;  // squared prime factor
            sign = -sign;
        }
    }
    if (r > 1) sign = -sign;
    return sign;
}

std::vector<std::int64_t> divisors(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("divisors: argument must be >= 1");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= k; ++d) {
        if (k % d == 0) {
            small.push_back(d);
            if (d != k / d) large.push_back(k / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace symchar

#pragma once

#include "absplit/exact/number.hpp"

#include <cstdint>
#include <vector>

namespace absplit {

/// Generalized binomial n(n-1)...(n-k+1)/k!, valid for negative n.
inline Integer binomial(std::int64_t n, unsigned k) {
    Integer num = 1;
    for (unsigned i = 0; i < k; ++i) num *= Integer(n) - i;
    return num / factorial(k);
}

/// Stirling numbers of the second kind S(m, k): partitions of an m-set into k blocks.
inline Integer stirling_second(unsigned m, unsigned k) {
    if (k > m) return 0;
    // row[j] = S(i, j)
    std::vector<Integer> row(m + 1, Integer(0));
    row[0] = 1;
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned j = i; j >= 1; --j) row[j] = Integer(j) * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

/// Signed Stirling numbers of the first kind: x(x-1)...(x-k+1) = sum_l s(k,l) x^l.
inline Integer stirling_first_signed(unsigned k, unsigned l) {
    if (l > k) return 0;
    std::vector<Integer> row(k + 1, Integer(0));
    row[0] = 1;
    for (unsigned i = 1; i <= k; ++i) {
        for (unsigned j = i; j >= 1; --j) row[j] = row[j - 1] - Integer(i - 1) * row[j];
        row[0] = -Integer(i - 1) * row[0];
    }
    return row[l];
}

/// All primes p <= bound.
inline std::vector<unsigned> primes_up_to(unsigned bound) {
    std::vector<unsigned> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(bound + 1, true);
    for (unsigned p = 2; p <= bound; ++p) {
        if (!sieve[p]) continue;
        out.push_back(p);
        for (unsigned long long q = 1ULL * p * p; q <= bound; q += p) sieve[q] = false;
    }
    return out;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Euler's totient.
inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace absplit

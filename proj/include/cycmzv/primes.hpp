#pragma once

#include <cstdint>
#include <vector>

namespace cycmzv {

bool is_prime(std::uint64_t n);

/// All primes p with lo <= p <= hi, ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
/// Inverse modulo a prime; a must be nonzero mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// inv[i] = i^{-1} mod p for 1 <= i < p (inv[0] = 0), via the linear recurrence.
std::vector<std::uint64_t> inverse_table(std::uint64_t p);

int euler_phi(int n);
int gcd_int(int a, int b);

}  // namespace cycmzv

#include "cycmzv/primes.hpp"

#include <numeric>
#include <stdexcept>

namespace cycmzv {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of zero modulo p");
    return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin bases for 64-bit inputs.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = lo < 2 ? 2 : lo; p <= hi; ++p)
        if (is_prime(p)) out.push_back(p);
    return out;
}

std::vector<std::uint64_t> inverse_table(std::uint64_t p) {
    std::vector<std::uint64_t> inv(p, 0);
    if (p < 2) return inv;
    inv[1] = 1;
    for (std::uint64_t i = 2; i < p; ++i)
        inv[i] = (p - mul_mod(p / i, inv[p % i], p)) % p;
    return inv;
}

int gcd_int(int a, int b) { return std::gcd(a, b); }

int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    int result = n;
    int m = n;
    for (int f = 2; f * f <= m; ++f) {
        if (m % f == 0) {
            while (m % f == 0) m /= f;
            result -= result / f;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace cycmzv

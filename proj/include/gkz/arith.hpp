#pragma once

// Exact integer and modular arithmetic shared by the other modules.
// Inputs in this project stay far below 2^62, so plain 64-bit integers are
// used with 128-bit intermediates where products appear.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace gkz {

struct Factorization {
    std::int64_t value = 0;
    // (prime, exponent), primes ascending and distinct.
    std::vector<std::pair<std::int64_t, int>> factors;
};

/// Floor-style remainder in [0, |m|).
std::int64_t mod(std::int64_t a, std::int64_t m);
std::int64_t powmod(std::int64_t base, std::int64_t e, std::int64_t m);

/// Deterministic Miller-Rabin for every 64-bit input.
bool is_prime(std::int64_t n);

/// Trial division; the sign of n is dropped. factorize(0) throws.
Factorization factorize(std::int64_t n);

/// Kronecker symbol (a/n) with the 2-adic convention (a/2) = 0 for even a,
/// +1 for a = +-1 mod 8 and -1 for a = +-3 mod 8. Throws for n == 0.
int kronecker(std::int64_t a, std::int64_t n);

/// Smallest nonnegative x with x^2 = a (mod p), or nullopt for a
/// non-residue. Tonelli-Shanks with non-residue search order 2, 3, 4, ...
/// Throws std::invalid_argument unless p is an odd prime.
std::optional<std::int64_t> sqrt_mod_prime(std::int64_t a, std::int64_t p);

/// D < 0 and D = 0, 1 (mod 4).
bool is_discriminant(std::int64_t d);
bool is_fundamental(std::int64_t d);
/// f with d = f^2 * d_K, d_K fundamental. Requires is_discriminant(d).
std::int64_t order_conductor(std::int64_t d);

/// Smallest r >= 0 with r^2 = D (mod 4N), or nullopt when (D, N) fails the
/// Heegner condition (no square root, or the order conductor shares a
/// factor with N). N must be an odd prime; D must be a negative
/// discriminant.
std::optional<std::int64_t> heegner_r(std::int64_t d, std::int64_t n);

/// All e >= 1 with e^2 | D, ascending.
std::vector<std::int64_t> square_divisors(std::int64_t d);

}  // namespace gkz

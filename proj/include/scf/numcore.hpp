#ifndef SCF_NUMCORE_HPP
#define SCF_NUMCORE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "scf/common.hpp"

namespace scf::numcore {

/// Complete prime factorization of n, primes strictly increasing.
struct Factorization {
    u128 n = 0;
    std::vector<std::pair<u128, int>> factors;

    u128 product() const;
};

/// All primes <= limit, ascending.
std::vector<u64> primes_up_to(u64 limit);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
u128 mulmod(u128 a, u128 b, u128 m);
u128 powmod(u128 a, u128 e, u128 m);

u64 gcd_u64(u64 a, u64 b);
u128 gcd_u128(u128 a, u128 b);

/// Modular inverse of a mod m; throws error if gcd(a, m) != 1.
u64 inv_mod(u64 a, u64 m);

/// Square root of a mod odd prime p (Tonelli-Shanks); nullopt when a is a non-residue.
std::optional<u64> sqrt_mod(u64 a, u64 p);

bool is_probable_prime(u128 n);

/// CRT: smallest nonnegative r with r = residues[i] mod moduli[i].
/// Moduli must be pairwise coprime; returns (r, product of moduli).
std::pair<u128, u128> crt_combine(const std::vector<i64>& residues,
                                  const std::vector<u64>& moduli);

/// Trial division below 10^6, then Brent rho. Fully reliable up to ~10^33
/// for numbers whose second-largest prime factor fits comfortably in 64 bits
/// (everything this project produces; conductors are ~10^16 at most).
Factorization factorize(u128 n);

u128 isqrt(u128 n);
bool is_perfect_square(u128 n, u128* root = nullptr);

bool is_squarefree(u128 n);

} // namespace scf::numcore

#endif

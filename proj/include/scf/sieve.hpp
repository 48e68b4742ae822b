#ifndef SCF_SIEVE_HPP
#define SCF_SIEVE_HPP

#include <vector>

#include "scf/common.hpp"

namespace scf::sieve {

/// Parameters of the squarefree k-tuple sieve over t = a mod q,
/// t in [x, (1+alpha) x].
struct SieveSpec {
    u64 x = 0;
    double alpha = 0.03;
    u64 a = 0;
    u64 q = 1;
    std::vector<u64> offsets; // delta_1 = 0 first
    double small_prime_floor = 0;
    u128 z = 0;
    bool z_overridden = false;

    u64 k() const { return offsets.size(); }
    u64 window_lo() const { return x; }
    u64 window_hi() const; // floor((1 + alpha) x)
    /// Stage-(ii) prime bound 2 (1+alpha) x / sqrt(z).
    long double stage2_bound() const;

    /// Default z = q^2 (log x)^{4k}.
    static u128 default_z(u64 x, u64 q, u64 k);
    static SieveSpec make(u64 x, double alpha, u64 a, u64 q,
                          std::vector<u64> offsets, double small_prime_floor);

    /// Throws error on any invariant violation (done before any sieving work).
    void validate() const;
};

struct SieveResult {
    std::vector<u64> survivors;
    u64 removed_stage1 = 0;
    u64 removed_stage2 = 0;
    u64 progression_size = 0;
    u64 n_alpha = 0; // |survivors|
};

/// Residue-marking implementation: per-prime start offsets from square roots
/// of -27 mod p, cofactor division for exact exponents.
SieveResult sieve_survivors(const SieveSpec& spec);

/// Oracle: identical stage filter by direct factorization of every g(t+delta_j).
/// Window length capped at 10^6.
SieveResult brute_force_survivors(const SieveSpec& spec);

/// N_alpha without materializing the survivor list.
u64 count_in_window(const SieveSpec& spec);

/// Residue classes T mod p with g(T) = 0 mod p (0, 1 or 2 classes).
std::vector<u64> g_roots_mod_p(u64 p);

} // namespace scf::sieve

#endif

#ifndef SCF_CHARACTERS_HPP
#define SCF_CHARACTERS_HPP

#include <complex>
#include <vector>

#include "scf/common.hpp"

namespace scf::characters {

enum class SplittingType { Split, Inert, Ramified };

/// Number of distinct roots of f_t modulo p. Direct scan for small p,
/// Frobenius gcd (deg gcd(x^p - x, f_t)) for larger p.
int count_roots_mod_p(u64 t, u64 p);

/// Ramified iff p | g(t); otherwise Split (3 roots) or Inert (0 roots).
/// One or two roots with p coprime to g(t) is an arithmetic impossibility
/// and raises internal_error.
SplittingType splitting_type(u64 t, u64 p);

/// All residues t mod p for which f_t splits into 3 distinct linear factors.
/// Count is (p-4)/3 for p = 1 mod 3 and (p-2)/3 for p = 2 mod 3. Requires p >= 5.
std::vector<u64> split_residues(u64 p);

/// Primitive cubic Dirichlet character mod a squarefree conductor q = g(t),
/// stored as per-prime exponent data: chi(n) = omega^{sum_p e_p * ind_p(n)}.
/// The conjugate character is equally valid; we pin e_{p_min} = 1.
struct CubicCharacter {
    struct Component {
        u64 p = 0;         // prime factor of the conductor, p = 1 mod 3
        u64 generator = 0; // smallest primitive root mod p
        u64 omega_elem = 0; // generator^((p-1)/3) mod p
        int exponent = 0;  // e_p in {1, 2}
    };

    u64 conductor = 0;
    std::vector<Component> components;

    /// Residue class of chi(n) as a power of omega: 0,1,2; -1 when gcd(n,q) > 1.
    int chi_class(u128 n) const;
    std::complex<long double> eval(u128 n) const;
    CubicCharacter conjugate() const;
};

/// omega = e^{2 pi i / 3} raised to cls; cls = -1 gives 0.
std::complex<long double> omega_pow(int cls);

/// Determine the exponent vector of the character attached to K_t from
/// split/inert data of primes up to test_prime_bound.
CubicCharacter build_character(u64 t, u64 test_prime_bound = 100);

/// Dense chi lookup table for O(q) sweeps (Gauss sums, L series).
class CharTable {
  public:
    explicit CharTable(const CubicCharacter& chi);
    /// Same encoding as CubicCharacter::chi_class.
    int cls(u64 a) const;
    u64 conductor() const { return q_; }

  private:
    u64 q_;
    std::vector<u64> primes_;
    std::vector<int> exponents_;
    std::vector<std::vector<signed char>> index_mod_p_;
};

} // namespace scf::characters

#endif

#include "scf/characters.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "scf/fields.hpp"
#include "scf/numcore.hpp"

namespace scf::characters {

using numcore::mulmod;
using numcore::powmod;

namespace {

// Degree <= 2 polynomials over F_p, used for Frobenius computations mod f_t.
using Poly = std::array<u64, 3>;

Poly poly_mul_mod_f(const Poly& a, const Poly& b, u64 t, u64 p) {
    // Full product, degree <= 4.
    u64 c[5] = {0, 0, 0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < 3; ++j)
            c[i + j] = (c[i + j] + (u128)a[i] * b[j]) % p;
    }
    // Reduce with x^3 = t x^2 + (t+3) x + 1 (f_t is monic).
    u64 tp = t % p, t3 = (t + 3) % p;
    for (int d = 4; d >= 3; --d) {
        u64 lead = c[d];
        if (lead == 0) continue;
        c[d] = 0;
        c[d - 1] = (c[d - 1] + (u128)lead * tp) % p;
        c[d - 2] = (c[d - 2] + (u128)lead * t3) % p;
        c[d - 3] = (c[d - 3] + lead) % p;
    }
    return {c[0], c[1], c[2]};
}

Poly poly_pow_x(u64 e, u64 t, u64 p) {
    Poly result = {1, 0, 0};
    Poly base = {0, 1, 0}; // x
    while (e) {
        if (e & 1) result = poly_mul_mod_f(result, base, t, p);
        base = poly_mul_mod_f(base, base, t, p);
        e >>= 1;
    }
    return result;
}

int poly_deg(const std::vector<u64>& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// gcd of polynomials over F_p; returns degree of the gcd.
int poly_gcd_degree(std::vector<u64> a, std::vector<u64> b, u64 p) {
    while (true) {
        int db = poly_deg(b);
        if (db < 0) return poly_deg(a);
        int da = poly_deg(a);
        if (da < db) {
            std::swap(a, b);
            continue;
        }
        u64 inv_lead = numcore::inv_mod(b[db], p);
        while (da >= db && da >= 0) {
            u64 coef = mulmod(a[da], inv_lead, p);
            for (int i = 0; i <= db; ++i) {
                u64 sub = mulmod(coef, b[i], p);
                u64& tgt = a[da - db + i];
                tgt = (tgt + p - sub) % p;
            }
            da = poly_deg(a);
        }
        std::swap(a, b);
    }
}

int count_roots_by_scan(u64 t, u64 p) {
    u64 tp = t % p, t3 = (t + 3) % p;
    int count = 0;
    for (u64 x = 0; x < p; ++x) {
        // ((x - t) x - (t+3)) x - 1 mod p
        u64 v = (x + p - tp) % p;
        v = mulmod(v, x, p);
        v = (v + p - t3) % p;
        v = mulmod(v, x, p);
        v = (v + p - 1 % p) % p;
        if (v == 0) ++count;
    }
    return count;
}

int count_roots_by_frobenius(u64 t, u64 p) {
    Poly xp = poly_pow_x(p, t, p);
    // x^p - x
    std::vector<u64> h = {xp[0], (xp[1] + p - 1) % p, xp[2]};
    std::vector<u64> f = {p - 1 % p, (2 * p - (t + 3) % p) % p, (p - t % p) % p, 1};
    int d = poly_gcd_degree(f, h, p);
    return d < 0 ? 0 : d;
}

} // namespace

int count_roots_mod_p(u64 t, u64 p) {
    if (p < 2) throw error("count_roots_mod_p: p must be prime");
    if (p < 64) return count_roots_by_scan(t, p);
    return count_roots_by_frobenius(t, p);
}

SplittingType splitting_type(u64 t, u64 p) {
    if (p < 2 || !numcore::is_probable_prime(p))
        throw error("splitting_type: p must be prime");
    if (fields::g_eval(t) % p == 0) return SplittingType::Ramified;
    int roots = count_roots_mod_p(t, p);
    if (roots == 3) return SplittingType::Split;
    if (roots == 0) return SplittingType::Inert;
    throw internal_error("splitting_type: f_t has " + std::to_string(roots) +
                         " roots mod " + std::to_string(p) +
                         " with p coprime to g(t); t=" + std::to_string(t));
}

std::vector<u64> split_residues(u64 p) {
    if (p < 5) throw error("split_residues: requires p >= 5");
    if (!numcore::is_probable_prime(p)) throw error("split_residues: p must be prime");
    // For x outside {0, -1}, f_t(x) = 0 mod p pins t = (x^3 - 3x - 1)/(x^2 + x).
    // Bucketing the map x -> t counts distinct roots per residue class in O(p).
    std::vector<unsigned char> root_count(p, 0);
    for (u64 x = 0; x < p; ++x) {
        u64 den = (mulmod(x, x, p) + x) % p;
        if (den == 0) continue; // x in {0, p-1}: f_t(x) is -1 or 1, never 0
        u64 num = mulmod(mulmod(x, x, p), x, p);
        num = (num + p - mulmod(3 % p, x, p)) % p;
        num = (num + p - 1) % p;
        u64 t = mulmod(num, numcore::inv_mod(den, p), p);
        ++root_count[t];
    }
    std::vector<u64> out;
    for (u64 t = 0; t < p; ++t) {
        if (root_count[t] == 3) {
            if (fields::g_eval(t) % p == 0)
                throw internal_error("split_residues: 3 roots at ramified class");
            out.push_back(t);
        }
    }
    u64 expected = (p % 3 == 1) ? (p - 4) / 3 : (p - 2) / 3;
    if (out.size() != expected)
        throw internal_error("split_residues: count " + std::to_string(out.size()) +
                             " != expected " + std::to_string(expected) +
                             " for p=" + std::to_string(p));
    return out;
}

std::complex<long double> omega_pow(int cls) {
    static const std::complex<long double> kOmega(-0.5L, 0.86602540378443864676L);
    if (cls < 0) return {0, 0};
    if (cls % 3 == 0) return {1, 0};
    if (cls % 3 == 1) return kOmega;
    return std::conj(kOmega);
}

namespace {

// ind_p(a) mod 3 via the cubic-residue class of a: a^((p-1)/3) is 1, w or w^2.
int cubic_index(u64 a, u64 p, u64 omega_elem) {
    u64 v = powmod(a % p, (p - 1) / 3, p);
    if (v == 1) return 0;
    if (v == omega_elem) return 1;
    u64 w2 = mulmod(omega_elem, omega_elem, p);
    if (v == w2) return 2;
    throw internal_error("cubic_index: value outside the cube-root orbit");
}

u64 smallest_primitive_root(u64 p) {
    if (p == 2) return 1;
    auto fac = numcore::factorize(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& [q, e] : fac.factors) {
            if (powmod(g, (p - 1) / (u64)q, p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw internal_error("smallest_primitive_root: none found");
}

} // namespace

int CubicCharacter::chi_class(u128 n) const {
    int cls = 0;
    for (const auto& c : components) {
        u64 a = u64(n % c.p);
        if (a == 0) return -1;
        cls += c.exponent * cubic_index(a, c.p, c.omega_elem);
    }
    return cls % 3;
}

std::complex<long double> CubicCharacter::eval(u128 n) const {
    return omega_pow(chi_class(n));
}

CubicCharacter CubicCharacter::conjugate() const {
    CubicCharacter out = *this;
    for (auto& c : out.components) c.exponent = 3 - c.exponent;
    return out;
}

CubicCharacter build_character(u64 t, u64 test_prime_bound) {
    if (t % 3 == 0)
        throw error("build_character: 3 | t, conductor divisible by 9");
    u128 g128 = fields::g_eval(t);
    if (g128 > ~u64(0)) throw error("build_character: conductor exceeds 64 bits");
    u64 q = u64(g128);
    if (!numcore::is_squarefree(q))
        throw error("build_character: conductor " + std::to_string(q) + " not squarefree");

    auto fac = numcore::factorize(q);
    CubicCharacter chi;
    chi.conductor = q;
    for (const auto& [p128, e] : fac.factors) {
        u64 p = u64(p128);
        if (p % 3 != 1)
            throw internal_error("build_character: conductor prime " + std::to_string(p) +
                                 " is not 1 mod 3");
        CubicCharacter::Component c;
        c.p = p;
        c.generator = smallest_primitive_root(p);
        c.omega_elem = powmod(c.generator, (p - 1) / 3, p);
        c.exponent = 1;
        chi.components.push_back(c);
    }
    size_t m = chi.components.size();

    // Splitting data for test primes coprime to q.
    std::vector<u64> test_primes;
    std::vector<bool> splits;
    for (u64 r : numcore::primes_up_to(test_prime_bound)) {
        if (q % r == 0) continue;
        test_primes.push_back(r);
        splits.push_back(splitting_type(t, r) == SplittingType::Split);
    }
    if (test_primes.size() < 2)
        throw error("build_character: test_prime_bound too small");

    // ind_p(r) mod 3 per component and test prime.
    std::vector<std::vector<int>> ind(m, std::vector<int>(test_primes.size()));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < test_primes.size(); ++j)
            ind[i][j] = cubic_index(test_primes[j], chi.components[i].p,
                                    chi.components[i].omega_elem);

    // chi(r) = 1 iff r splits; search {1,2}^m for consistent exponent vectors.
    std::vector<std::vector<int>> survivors;
    for (u64 mask = 0; mask < (u64(1) << m); ++mask) {
        std::vector<int> e(m);
        for (size_t i = 0; i < m; ++i) e[i] = (mask >> i) & 1 ? 2 : 1;
        bool ok = true;
        for (size_t j = 0; j < test_primes.size() && ok; ++j) {
            int cls = 0;
            for (size_t i = 0; i < m; ++i) cls += e[i] * ind[i][j];
            ok = ((cls % 3 == 0) == bool(splits[j]));
        }
        if (ok) survivors.push_back(std::move(e));
    }
    if (survivors.empty())
        throw internal_error("build_character: no exponent vector fits splitting data, t=" +
                             std::to_string(t));
    if (survivors.size() > 2)
        throw error("build_character: underdetermined for t=" + std::to_string(t) +
                    "; increase test_prime_bound beyond " + std::to_string(test_prime_bound));
    if (survivors.size() == 2) {
        for (size_t i = 0; i < m; ++i)
            if (survivors[0][i] + survivors[1][i] != 3)
                throw internal_error("build_character: surviving pair is not conjugate");
    }
    const auto& e = survivors[0][0] == 1 ? survivors[0] : survivors[1 % survivors.size()];
    if (e[0] != 1)
        throw internal_error("build_character: cannot normalize e_{p_min} = 1");
    for (size_t i = 0; i < m; ++i) chi.components[i].exponent = e[i];
    return chi;
}

CharTable::CharTable(const CubicCharacter& chi) : q_(chi.conductor) {
    for (const auto& c : chi.components) {
        primes_.push_back(c.p);
        exponents_.push_back(c.exponent);
        std::vector<signed char> idx(c.p, -1);
        u64 v = 1;
        for (u64 j = 0; j + 1 < c.p; ++j) {
            idx[v] = static_cast<signed char>(j % 3);
            v = mulmod(v, c.generator, c.p);
        }
        index_mod_p_.push_back(std::move(idx));
    }
}

int CharTable::cls(u64 a) const {
    int cls = 0;
    for (size_t i = 0; i < primes_.size(); ++i) {
        signed char ix = index_mod_p_[i][a % primes_[i]];
        if (ix < 0) return -1;
        cls += exponents_[i] * ix;
    }
    return cls % 3;
}

} // namespace scf::characters

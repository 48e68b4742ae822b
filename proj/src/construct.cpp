#include "scf/construct.hpp"

#include <algorithm>
#include <cmath>

#include "scf/characters.hpp"
#include "scf/fields.hpp"
#include "scf/numcore.hpp"

namespace scf::construct {

TupleConstruction build_construction(unsigned k, double epsilon, u128 x) {
    if (k < 1) throw error("build_construction: k must be >= 1");
    if (epsilon <= 0) throw error("build_construction: epsilon must be positive");
    if (x < 2) throw error("build_construction: x too small");
    TupleConstruction c;
    c.k = k;
    c.epsilon = epsilon;
    c.x = x;
    c.prime_bound = epsilon * std::log((double)to_ld(x));
    u64 lower = 3 * u64(k) + 2;
    if (c.prime_bound < (double)lower)
        throw error("build_construction: no splitting primes (eps log x < 3k+2)");
    c.prime_list = numcore::primes_up_to(u64(c.prime_bound));
    for (u64 p : c.prime_list)
        if (p >= lower) c.splitting_primes.push_back(p);
    if (c.splitting_primes.empty())
        throw error("build_construction: no splitting primes in [3k+2, eps log x]");

    // q = product of all primes <= eps log x.
    u128 q128 = 1;
    for (u64 p : c.prime_list) {
        q128 *= p;
        if (q128 > ~u64(0)) throw error("build_construction: modulus q overflows 64 bits");
    }
    c.q = u64(q128);

    // k smallest split residues at every splitting prime.
    for (u64 p : c.splitting_primes) {
        auto residues = characters::split_residues(p);
        if (residues.size() < k)
            throw internal_error("build_construction: fewer than k split residues mod " +
                                 std::to_string(p));
        residues.resize(k);
        c.split_table[p] = residues;
    }

    for (unsigned j = 0; j < k; ++j) {
        std::vector<i64> residues;
        std::vector<u64> moduli;
        for (u64 p : c.prime_list) {
            if (p >= lower) {
                residues.push_back(i64(c.split_table[p][j]));
            } else if (p == 13) {
                residues.push_back(2);
            } else {
                residues.push_back(1);
            }
            moduli.push_back(p);
        }
        auto [r, m] = numcore::crt_combine(residues, moduli);
        if (m != c.q) throw internal_error("build_construction: CRT modulus mismatch");
        c.a.push_back(u64(r));
    }
    for (unsigned j = 0; j < k; ++j)
        c.deltas.push_back(i64(c.a[j]) - i64(c.a[0]));

    // g(a_j) must avoid every prime <= eps log x.
    for (unsigned j = 0; j < k; ++j)
        for (u64 p : c.prime_list)
            if (fields::g_eval(c.a[j]) % p == 0)
                throw internal_error("build_construction: g(a_j) = 0 mod " +
                                     std::to_string(p));
    return c;
}

ValidationReport validate_construction(const TupleConstruction& c, u64 samples) {
    ValidationReport rep;
    rep.samples = samples;
    i64 min_delta = *std::min_element(c.deltas.begin(), c.deltas.end());
    for (u64 s = 1; s <= samples; ++s) {
        u64 t = c.a[0] + c.q * s;
        if (i64(t) + min_delta < 0) continue;
        for (unsigned j = 0; j < c.k; ++j) {
            u64 tj = u64(i64(t) + c.deltas[j]);
            for (u64 p : c.splitting_primes) {
                if (characters::splitting_type(tj, p) != characters::SplittingType::Split)
                    rep.violations.push_back("t=" + std::to_string(t) + " j=" +
                                             std::to_string(j) + ": p=" +
                                             std::to_string(p) + " does not split");
            }
            for (u64 p : c.prime_list) {
                if (fields::g_eval(tj) % p == 0)
                    rep.violations.push_back("t=" + std::to_string(t) + " j=" +
                                             std::to_string(j) + ": g divisible by " +
                                             std::to_string(p));
            }
        }
    }
    return rep;
}

} // namespace scf::construct

#include "scf/sieve.hpp"

#include <algorithm>
#include <cmath>

#include "scf/fields.hpp"
#include "scf/numcore.hpp"

namespace scf::sieve {

namespace {

u64 g_u64(u64 m) {
    u128 g = fields::g_eval(m);
    if (g > ~u64(0)) throw error("sieve: g value exceeds 64 bits");
    return u64(g);
}

bool stage1_prime(const SieveSpec& spec, u128 p) {
    return to_ld(p) > spec.small_prime_floor && p <= spec.z;
}

bool stage2_prime(const SieveSpec& spec, u128 p) {
    return p > spec.z && to_ld(p) <= spec.stage2_bound();
}

} // namespace

u64 SieveSpec::window_hi() const {
    return u64(std::floor((1.0L + (long double)alpha) * (long double)x));
}

long double SieveSpec::stage2_bound() const {
    return 2 * (1.0L + (long double)alpha) * (long double)x / std::sqrt(to_ld(z));
}

u128 SieveSpec::default_z(u64 x, u64 q, u64 k) {
    long double v = (long double)q * q * std::pow(std::log((long double)x), 4.0L * k);
    if (v > 1e36L) return (u128)1e36L;
    u128 z = (u128)v;
    return z > 0 ? z : 1;
}

SieveSpec SieveSpec::make(u64 x, double alpha, u64 a, u64 q, std::vector<u64> offsets,
                          double small_prime_floor) {
    SieveSpec s;
    s.x = x;
    s.alpha = alpha;
    s.a = a;
    s.q = q;
    s.offsets = std::move(offsets);
    s.small_prime_floor = small_prime_floor;
    s.z = default_z(x, q, s.offsets.size());
    return s;
}

void SieveSpec::validate() const {
    if (x < 3) throw error("SieveSpec: x must be >= 3");
    if (alpha < 0.02 || alpha > 1.0) throw error("SieveSpec: alpha outside [0.02, 1]");
    if (q == 0) throw error("SieveSpec: q must be positive");
    if (a >= q) throw error("SieveSpec: residue a must satisfy 0 <= a < q");
    if (offsets.empty() || offsets[0] != 0)
        throw error("SieveSpec: offsets must be nonempty with delta_1 = 0");
    for (size_t i = 1; i < offsets.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (offsets[i] == offsets[j]) throw error("SieveSpec: duplicate offsets");
    if (z == 0) throw error("SieveSpec: z must be positive");
    u64 max_delta = *std::max_element(offsets.begin(), offsets.end());
    if (window_hi() > 3000000000ULL || max_delta > 3000000000ULL)
        throw error("SieveSpec: window beyond supported magnitude");
    // Standing hypothesis of the sieve: the progression pins g(t+delta_j) mod p
    // for every p <= small_prime_floor, and none of them vanish. That requires
    // p | q for each such prime.
    for (u64 p : numcore::primes_up_to(u64(small_prime_floor))) {
        if (q % p != 0)
            throw error("SieveSpec: prime " + std::to_string(p) +
                        " <= small_prime_floor does not divide q");
        for (u64 d : offsets)
            if (g_u64(a + d) % p == 0)
                throw error("SieveSpec: g(a+delta) divisible by small prime " +
                            std::to_string(p));
    }
}

std::vector<u64> g_roots_mod_p(u64 p) {
    if (p == 2) return {};      // g is always odd
    if (p == 3) return {0};     // 3 | g(T) iff 3 | T
    // 4 g(T) = (2T+3)^2 + 27: roots come from square roots of -27 mod p.
    auto s = numcore::sqrt_mod(p - 27 % p, p);
    if (!s) return {};
    u64 inv2 = numcore::inv_mod(2, p);
    u64 r1 = numcore::mulmod((*s + p - 3 % p) % p, inv2, p);
    u64 r2 = numcore::mulmod((p - *s + p - 3 % p) % p, inv2, p);
    if (r1 == r2) return {r1};
    return {r1, r2};
}

namespace {

struct EngineResult {
    std::vector<u64> survivors;
    u64 removed_stage1 = 0;
    u64 removed_stage2 = 0;
    u64 progression_size = 0;
};

EngineResult run_marking_engine(const SieveSpec& spec, bool collect) {
    spec.validate();
    EngineResult res;
    u64 lo = spec.window_lo(), hi = spec.window_hi();
    if (hi < lo) return res;
    u64 t0 = spec.a >= lo % spec.q ? lo - lo % spec.q + spec.a
                                   : lo - lo % spec.q + spec.q + spec.a;
    if (t0 > hi) return res;
    u64 m_count = (hi - t0) / spec.q + 1;
    u64 k = spec.k();
    if (m_count > 5000000 || m_count * k > 20000000)
        throw error("sieve_survivors: progression too large for in-memory pass");
    res.progression_size = m_count;

    u64 max_delta = *std::max_element(spec.offsets.begin(), spec.offsets.end());
    u64 g_max = g_u64(hi + max_delta);
    u64 p_mark = u64(numcore::isqrt(g_max)) + 1;
    if (p_mark <= spec.small_prime_floor)
        throw error("sieve_survivors: window too small relative to small_prime_floor");

    // cof[j*m + i] = g(t_i + delta_j) with marked primes divided out.
    std::vector<u64> cof(k * m_count);
    for (u64 j = 0; j < k; ++j)
        for (u64 i = 0; i < m_count; ++i)
            cof[j * m_count + i] = g_u64(t0 + spec.q * i + spec.offsets[j]);

    std::vector<unsigned char> s1(m_count, 0), s2(m_count, 0);
    struct BigSquare {
        u64 i, j, p;
    };
    std::vector<BigSquare> big_squares;
    long double b2 = spec.stage2_bound();

    auto process_hit = [&](u64 i, u64 j, u64 p) {
        u64& c = cof[j * m_count + i];
        int e = 0;
        while (c % p == 0) {
            c /= p;
            ++e;
        }
        if (e == 0)
            throw internal_error("sieve: marked class does not divide g");
        if (stage1_prime(spec, p)) {
            s1[i] = 1;
        } else if (e >= 2 && p > spec.z) {
            if ((long double)p <= b2)
                s2[i] = 1;
            else
                big_squares.push_back({i, j, p});
        }
    };

    for (u64 p : numcore::primes_up_to(p_mark)) {
        if ((long double)p <= spec.small_prime_floor) continue; // excluded by hypothesis
        auto roots = g_roots_mod_p(p);
        if (roots.empty()) continue;
        for (u64 root : roots) {
            for (u64 j = 0; j < k; ++j) {
                u64 target = (root + p - spec.offsets[j] % p) % p;
                if (spec.q % p == 0) {
                    if (t0 % p == target)
                        for (u64 i = 0; i < m_count; ++i) process_hit(i, j, p);
                    continue;
                }
                u64 qinv = numcore::inv_mod(spec.q % p, p);
                u64 i0 = numcore::mulmod((target + p - t0 % p) % p, qinv, p);
                for (u64 i = i0; i < m_count; i += p) process_hit(i, j, p);
            }
        }
    }

    // Remaining cofactors are 1 or a single prime > sqrt(g_max).
    for (u64 j = 0; j < k; ++j) {
        for (u64 i = 0; i < m_count; ++i) {
            u64 c = cof[j * m_count + i];
            if (c > 1 && stage1_prime(spec, c)) s1[i] = 1;
        }
    }

    for (u64 i = 0; i < m_count; ++i) {
        if (s1[i]) {
            ++res.removed_stage1;
        } else if (s2[i]) {
            ++res.removed_stage2;
        } else if (collect) {
            res.survivors.push_back(t0 + spec.q * i);
        }
    }
    if (!collect) {
        // still need the count
        res.survivors.clear();
    }
    for (const auto& bs : big_squares) {
        if (!s1[bs.i] && !s2[bs.i]) {
            // g = p^2 is impossible: (2t+3-2p)(2t+3+2p) = -27 has no such solution.
            u64 g = g_u64(t0 + spec.q * bs.i + spec.offsets[bs.j]);
            if ((u128)bs.p * bs.p == g)
                throw internal_error("sieve: survivor with g(t+delta) = p^2");
        }
    }
    return res;
}

} // namespace

SieveResult sieve_survivors(const SieveSpec& spec) {
    EngineResult e = run_marking_engine(spec, true);
    SieveResult r;
    r.survivors = std::move(e.survivors);
    r.removed_stage1 = e.removed_stage1;
    r.removed_stage2 = e.removed_stage2;
    r.progression_size = e.progression_size;
    r.n_alpha = r.survivors.size();
    return r;
}

SieveResult brute_force_survivors(const SieveSpec& spec) {
    spec.validate();
    u64 lo = spec.window_lo(), hi = spec.window_hi();
    if (hi >= lo && hi - lo > 1000000)
        throw error("brute_force_survivors: window longer than 10^6");
    SieveResult r;
    if (hi < lo) return r;
    long double b2 = spec.stage2_bound();
    for (u64 t = lo; t <= hi; ++t) {
        if (t % spec.q != spec.a % spec.q) continue;
        ++r.progression_size;
        bool kill1 = false, kill2 = false, exact_square = false;
        for (u64 d : spec.offsets) {
            auto fac = numcore::factorize(fields::g_eval(t + d));
            for (const auto& [p, e] : fac.factors) {
                if (to_ld(p) <= spec.small_prime_floor)
                    throw internal_error("brute_force_survivors: hypothesis violated");
                if (stage1_prime(spec, p)) kill1 = true;
                if (e >= 2 && stage2_prime(spec, p)) kill2 = true;
                if (e >= 2 && p > spec.z && to_ld(p) > b2 &&
                    p * p == fields::g_eval(t + d))
                    exact_square = true;
            }
        }
        if (exact_square && !kill1 && !kill2)
            throw internal_error("brute force: survivor with g(t+delta) = p^2");
        if (kill1)
            ++r.removed_stage1;
        else if (kill2)
            ++r.removed_stage2;
        else
            r.survivors.push_back(t);
    }
    r.n_alpha = r.survivors.size();
    return r;
}

u64 count_in_window(const SieveSpec& spec) {
    EngineResult e = run_marking_engine(spec, false);
    return e.progression_size - e.removed_stage1 - e.removed_stage2;
}

} // namespace scf::sieve

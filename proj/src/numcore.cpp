#include "scf/numcore.hpp"

#include <algorithm>
#include <mutex>

namespace scf {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 parse_u128(const std::string& s) {
    if (s.empty()) throw error("empty integer literal");
    u128 v = 0;
    constexpr u128 kMax = ~u128(0);
    for (char c : s) {
        if (c < '0' || c > '9') throw error("invalid integer literal: " + s);
        unsigned d = unsigned(c - '0');
        if (v > (kMax - d) / 10) throw error("integer literal out of range: " + s);
        v = v * 10 + d;
    }
    return v;
}

} // namespace scf

namespace scf::numcore {

u128 Factorization::product() const {
    u128 r = 1;
    for (const auto& [p, e] : factors)
        for (int i = 0; i < e; ++i) r *= p;
    return r;
}

std::vector<u64> primes_up_to(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<bool> comp(limit + 1, false);
    for (u64 i = 2; i * i <= limit; ++i)
        if (!comp[i])
            for (u64 j = i * i; j <= limit; j += i) comp[j] = true;
    for (u64 i = 2; i <= limit; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

u64 mulmod(u64 a, u64 b, u64 m) { return u64((u128)a * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u128 mulmod(u128 a, u128 b, u128 m) {
    a %= m;
    b %= m;
    if (m <= ~u64(0)) return (u128)((u64)a) * (u64)b % m;
    // Shift-add fallback for 128-bit moduli.
    if (a < b) std::swap(a, b);
    u128 r = 0;
    while (b) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        a <<= 1;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

u128 powmod(u128 a, u128 e, u128 m) {
    u128 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

u128 gcd_u128(u128 a, u128 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

u64 inv_mod(u64 a, u64 m) {
    a %= m;
    i64 t = 0, newt = 1;
    u64 r = m, newr = a;
    while (newr != 0) {
        u64 qq = r / newr;
        i64 tmp = t - i64(qq) * newt;
        t = newt;
        newt = tmp;
        u64 tr = r - qq * newr;
        r = newr;
        newr = tr;
    }
    if (r != 1) throw error("inv_mod: arguments not coprime");
    return t < 0 ? u64(t + i64(m)) : u64(t);
}

std::optional<u64> sqrt_mod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return u64(0);
    if (p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // Tonelli-Shanks.
    u64 q = p - 1, s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 nonres = 2;
    while (powmod(nonres, (p - 1) / 2, p) != p - 1) ++nonres;
    u64 c = powmod(nonres, q, p);
    u64 x = powmod(a, (q + 1) / 2, p);
    u64 t = powmod(a, q, p);
    u64 m = s;
    while (t != 1) {
        u64 i = 0;
        u64 t2 = t;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
            if (i == m) return std::nullopt; // unreachable once residue check passed
        }
        u64 b = c;
        for (u64 j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
        x = mulmod(x, b, p);
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        m = i;
    }
    return x;
}

namespace {

bool miller_rabin_round(u128 n, u128 a, u128 d, int s) {
    a %= n;
    if (a == 0) return true;
    u128 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

bool is_probable_prime(u128 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    if (n <= ~u64(0)) {
        // Deterministic base set for 64-bit inputs.
        for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
            if (!miller_rabin_round(n, a, d, s)) return false;
        return true;
    }
    u64 seed = u64(n) ^ u64(n >> 64);
    for (int i = 0; i < 40; ++i) {
        seed = splitmix64(seed + i);
        u128 a = 2 + u128(seed) % (n - 3);
        if (!miller_rabin_round(n, a, d, s)) return false;
    }
    return true;
}

std::pair<u128, u128> crt_combine(const std::vector<i64>& residues,
                                  const std::vector<u64>& moduli) {
    if (residues.size() != moduli.size())
        throw error("crt_combine: residue/modulus length mismatch");
    if (residues.empty()) throw error("crt_combine: empty system");
    u128 r = 0, m = 1;
    for (size_t i = 0; i < moduli.size(); ++i) {
        u64 mi = moduli[i];
        if (mi == 0) throw error("crt_combine: zero modulus");
        i64 raw = residues[i];
        u64 ri = u64(((raw % i64(mi)) + i64(mi)) % i64(mi));
        if (gcd_u128(m, mi) != 1)
            throw error("crt_combine: moduli not pairwise coprime");
        if (m > (~u128(0)) / mi) throw error("crt_combine: modulus product overflow");
        // x = r + m*s, with s = (ri - r) * m^{-1} mod mi
        u64 m_red = u64(m % mi);
        u64 r_red = u64(r % mi);
        u64 diff = (ri + mi - r_red) % mi;
        u64 s = mulmod(diff, inv_mod(m_red, mi), mi);
        r += m * s;
        m *= mi;
    }
    return {r, m};
}

namespace {

const std::vector<u64>& small_primes() {
    static std::once_flag flag;
    static std::vector<u64> primes;
    std::call_once(flag, [] { primes = primes_up_to(1000000); });
    return primes;
}

u128 brent_rho(u128 n, u64 seed) {
    if (n % 2 == 0) return 2;
    u128 y = 2 + splitmix64(seed) % (n - 2);
    u128 c = 1 + splitmix64(seed ^ 0xabcdefULL) % (n - 1);
    u128 m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
        x = y;
        for (u128 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
        u128 k = 0;
        while (k < r && g == 1) {
            ys = y;
            u128 lim = std::min(m, r - k);
            for (u128 i = 0; i < lim; ++i) {
                y = (mulmod(y, y, n) + c) % n;
                q = mulmod(q, x > y ? x - y : y - x, n);
            }
            g = gcd_u128(q, n);
            k += m;
        }
        r <<= 1;
    }
    if (g == n) {
        do {
            ys = (mulmod(ys, ys, n) + c) % n;
            g = gcd_u128(x > ys ? x - ys : ys - x, n);
        } while (g == 1);
    }
    return g;
}

void factor_rec(u128 n, std::vector<u128>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    u128 root;
    if (is_perfect_square(n, &root)) {
        factor_rec(root, out);
        factor_rec(root, out);
        return;
    }
    u128 d = n;
    u64 seed = 1;
    while (d == n) d = brent_rho(n, seed++);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

} // namespace

Factorization factorize(u128 n) {
    if (n == 0) throw error("factorize: n must be positive");
    Factorization f;
    f.n = n;
    u128 m = n;
    for (u64 p : small_primes()) {
        if ((u128)p * p > m) break;
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            f.factors.emplace_back(p, e);
        }
    }
    if (m > 1) {
        if (m <= u128(1000000) * 1000000 + 1 && is_probable_prime(m)) {
            f.factors.emplace_back(m, 1);
        } else {
            std::vector<u128> rest;
            factor_rec(m, rest);
            std::sort(rest.begin(), rest.end());
            for (size_t i = 0; i < rest.size();) {
                size_t j = i;
                while (j < rest.size() && rest[j] == rest[i]) ++j;
                f.factors.emplace_back(rest[i], int(j - i));
                i = j;
            }
        }
    }
    std::sort(f.factors.begin(), f.factors.end());
    return f;
}

u128 isqrt(u128 n) {
    if (n == 0) return 0;
    // Newton iteration from a safe overestimate.
    u128 x = n / 2 + 1;
    while (true) {
        u128 nx = (x + n / x) / 2;
        if (nx >= x) break;
        x = nx;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

bool is_perfect_square(u128 n, u128* root) {
    u128 r = isqrt(n);
    if (root) *root = r;
    return r * r == n;
}

bool is_squarefree(u128 n) {
    if (n == 0) throw error("is_squarefree: n must be positive");
    u128 m = n;
    for (u64 p : small_primes()) {
        if ((u128)p * p > m) break;
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return false;
        }
    }
    if (m == 1) return true;
    if (is_probable_prime(m)) return true;
    if (is_perfect_square(m)) return false;
    Factorization f = factorize(m);
    for (const auto& [p, e] : f.factors)
        if (e > 1) return false;
    return true;
}

} // namespace scf::numcore

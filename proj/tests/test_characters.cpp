#include <doctest.h>

#include <cmath>
#include <complex>

#include "scf/characters.hpp"
#include "scf/fields.hpp"
#include "scf/numcore.hpp"

using namespace scf;
using namespace scf::characters;

namespace {

// O(p) scan oracle: count roots of f_t mod p directly.
int roots_scan(u64 t, u64 p) {
    int n = 0;
    for (u64 x = 0; x < p; ++x) {
        u64 x2 = numcore::mulmod(x, x, p);
        u64 cube = numcore::mulmod(x2, x, p);
        u64 quad = numcore::mulmod(t % p, x2, p);
        u64 lin = numcore::mulmod((t + 3) % p, x, p);
        // x^3 - t x^2 - (t+3) x - 1, all terms already reduced mod p
        if ((cube + 3 * p - quad - lin - 1) % p == 0) ++n;
    }
    return n;
}

} // namespace

TEST_CASE("count_roots_mod_p matches direct scan") {
    for (u64 t : {0, 1, 2, 5, 7, 41, 104}) {
        for (u64 p : {2, 3, 5, 7, 11, 13, 61, 67, 71, 101, 499}) {
            CHECK(count_roots_mod_p(t, p) == roots_scan(t, p));
        }
    }
}

TEST_CASE("f_1 splits mod 5") {
    // Roots of x^3 - x^2 - 4x - 1 mod 5 are {1, 2, 3}.
    CHECK(count_roots_mod_p(1, 5) == 3);
    CHECK(splitting_type(1, 5) == SplittingType::Split);
}

TEST_CASE("splitting_type classification") {
    // p | g(t) is ramified: g(1) = 13, g(2) = 19.
    CHECK(splitting_type(1, 13) == SplittingType::Ramified);
    CHECK(splitting_type(2, 19) == SplittingType::Ramified);
    CHECK(splitting_type(1, 2) == SplittingType::Inert);
    CHECK(splitting_type(1, 3) == SplittingType::Inert);
    // Cross-check against root counts everywhere.
    for (u64 t : {1, 2, 4, 10, 100}) {
        for (u64 p : numcore::primes_up_to(200)) {
            auto s = splitting_type(t, p);
            int n = count_roots_mod_p(t, p);
            if (fields::g_eval(t) % p == 0)
                CHECK(s == SplittingType::Ramified);
            else if (n == 3)
                CHECK(s == SplittingType::Split);
            else {
                CHECK(n == 0);
                CHECK(s == SplittingType::Inert);
            }
        }
    }
}

TEST_CASE("split_residues against O(p^2) oracle and count formula") {
    for (u64 p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 97, 101, 103}) {
        std::vector<u64> oracle;
        for (u64 t = 0; t < p; ++t)
            if (fields::g_eval(t) % p != 0 && roots_scan(t, p) == 3) oracle.push_back(t);
        auto got = split_residues(p);
        CHECK(got == oracle);
        u64 expected = p % 3 == 1 ? (p - 4) / 3 : (p - 2) / 3;
        CHECK(got.size() == expected);
    }
}

TEST_CASE("build_character basic structure") {
    auto chi = build_character(1);
    CHECK(chi.conductor == 13);
    REQUIRE(chi.components.size() == 1);
    CHECK(chi.components[0].p == 13);
    CHECK(chi.components[0].exponent == 1);
    // Conductor primes are 1 mod 3.
    for (u64 t : {1, 2, 4, 7, 10, 104}) {
        auto c = build_character(t);
        for (const auto& comp : c.components) CHECK(comp.p % 3 == 1);
    }
    CHECK_THROWS_AS(build_character(3), error);  // 3 | t
    CHECK_THROWS_AS(build_character(5), error);  // g = 49 not squarefree
}

TEST_CASE("chi values encode splitting") {
    for (u64 t : {1, 2, 4, 10, 104}) {
        auto chi = build_character(t);
        for (u64 p : numcore::primes_up_to(300)) {
            int cls = chi.chi_class(p);
            switch (splitting_type(t, p)) {
                case SplittingType::Split: CHECK(cls == 0); break;
                case SplittingType::Inert: CHECK(cls != 0); CHECK(cls > 0); break;
                case SplittingType::Ramified: CHECK(cls == -1); break;
            }
        }
    }
}

TEST_CASE("chi is multiplicative, even, cubic") {
    for (u64 t : {1, 2, 104}) {
        auto chi = build_character(t);
        u64 q = chi.conductor;
        for (u64 a = 1; a < std::min<u64>(q, 40); ++a) {
            for (u64 b = 1; b < 40; ++b) {
                int ca = chi.chi_class(a), cb = chi.chi_class(b);
                int cab = chi.chi_class(u128(a) * b);
                if (ca < 0 || cb < 0)
                    CHECK(cab == -1);
                else
                    CHECK(cab == (ca + cb) % 3);
            }
        }
        CHECK(chi.chi_class(q - 1) == 0);      // even: chi(-1) = 1
        CHECK(chi.chi_class(q + 1) == 0);      // periodic, chi(1) = 1
        for (u64 n = 1; n < 50; ++n) {
            int c = chi.chi_class(n);
            if (c < 0) continue;
            u128 n3 = u128(n) * n * n;
            CHECK(chi.chi_class(n3) == 0);     // chi^3 = 1 on units
        }
    }
}

TEST_CASE("conjugate character flips classes") {
    auto chi = build_character(2);
    auto bar = chi.conjugate();
    for (u64 n = 1; n < 60; ++n) {
        int c = chi.chi_class(n), cb = bar.chi_class(n);
        if (c < 0)
            CHECK(cb == -1);
        else
            CHECK(cb == (3 - c) % 3);
    }
}

TEST_CASE("eval and omega_pow agree with chi_class") {
    auto chi = build_character(1);
    for (u64 n = 0; n < 30; ++n) {
        auto v = chi.eval(n);
        auto w = omega_pow(chi.chi_class(n));
        CHECK(std::abs(v - w) < 1e-15L);
    }
    CHECK(std::abs(omega_pow(0) - std::complex<long double>(1, 0)) < 1e-18L);
    CHECK(std::abs(omega_pow(1) + omega_pow(2) + 1.0L) < 1e-18L);
}

TEST_CASE("CharTable matches chi_class") {
    for (u64 t : {1, 2, 104}) {
        auto chi = build_character(t);
        CharTable table(chi);
        CHECK(table.conductor() == chi.conductor);
        for (u64 a = 0; a < chi.conductor; ++a)
            CHECK(table.cls(a) == chi.chi_class(a));
    }
}

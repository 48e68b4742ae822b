#include <doctest.h>

#include <cmath>

#include "scf/characters.hpp"
#include "scf/construct.hpp"
#include "scf/fields.hpp"

using namespace scf;
using namespace scf::construct;

namespace {

// epsilon giving eps * log(x) = bound for x = 10^16.
double eps_for(double bound) {
    return bound / std::log(1e16);
}

const u128 kX = u128(10000000000000000ULL); // 10^16

} // namespace

TEST_CASE("k=1 construction at prime bound 7") {
    auto c = build_construction(1, eps_for(7.4), kX);
    CHECK(c.k == 1);
    CHECK(c.prime_list == std::vector<u64>{2, 3, 5, 7});
    CHECK(c.splitting_primes == std::vector<u64>{5, 7});
    CHECK(c.q == 210);
    REQUIRE(c.a.size() == 1);
    CHECK(c.a[0] < c.q);
    CHECK(c.deltas == std::vector<i64>{0});
    // The chosen residue is the smallest split residue at each splitting prime.
    for (u64 p : c.splitting_primes) {
        auto res = characters::split_residues(p);
        REQUIRE(!res.empty());
        CHECK(c.a[0] % p == res[0]);
        CHECK(c.split_table.at(p) == std::vector<u64>{res[0]});
    }
    // Small primes: a = 2 mod 13 does not apply (13 > bound); a = 1 mod 2, 3.
    CHECK(c.a[0] % 2 == 1);
    CHECK(c.a[0] % 3 == 1);
}

TEST_CASE("k=2 construction at prime bound 11") {
    auto c = build_construction(2, eps_for(11.1), kX);
    CHECK(c.q == 2310);
    CHECK(c.splitting_primes == std::vector<u64>{11});
    REQUIRE(c.a.size() == 2);
    CHECK(c.deltas[0] == 0);
    CHECK(c.deltas[1] == i64(c.a[1]) - i64(c.a[0]));
    auto res = characters::split_residues(11);
    REQUIRE(res.size() >= 2);
    CHECK(c.a[0] % 11 == res[0]);
    CHECK(c.a[1] % 11 == res[1]);
    // Both residues force splitting at 11, nothing below 11 divides g.
    auto rep = validate_construction(c, 30);
    CHECK(rep.ok());
    CHECK(rep.samples == 30);
}

TEST_CASE("k=3 construction at prime bound 13 uses a = 2 mod 13") {
    // 13 >= 3k+2 = 11, so 13 is a splitting prime here, not a "2 mod 13" prime.
    auto c = build_construction(3, eps_for(13.1), kX);
    CHECK(c.q == 30030);
    CHECK(c.splitting_primes == std::vector<u64>{11, 13});
    auto rep = validate_construction(c, 30);
    CHECK(rep.ok());

    // With k=2 and bound 13, 3k+2 = 8 <= 11 so splitting primes are {11, 13} too;
    // still valid.
    auto c2 = build_construction(2, eps_for(13.1), kX);
    CHECK(validate_construction(c2, 30).ok());
}

TEST_CASE("small-prime congruences hold") {
    auto c = build_construction(2, eps_for(11.1), kX);
    for (u64 aj : c.a) {
        CHECK(aj % 2 == 1);
        CHECK(aj % 3 == 1);
        CHECK(aj % 5 == 1);
        CHECK(aj % 7 == 1);
    }
    // 13 < 3k+2 never happens for k >= 4; for k = 4 the rule a = 2 mod 13 kicks in.
    double bound = 17.2; // 3k+2 = 14, splitting primes {17}
    auto c4 = build_construction(4, bound / std::log(1e16), kX);
    CHECK(c4.splitting_primes == std::vector<u64>{17});
    for (u64 aj : c4.a) CHECK(aj % 13 == 2);
    CHECK(validate_construction(c4, 20).ok());
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(build_construction(2, 0.01, kX), error);  // bound < 3k+2
    CHECK_THROWS_AS(build_construction(5, eps_for(13.1), kX), error); // no splitting primes
}

TEST_CASE("splitting holds along the progression") {
    auto c = build_construction(2, eps_for(11.1), kX);
    for (u64 s = 0; s < 5; ++s) {
        u64 t1 = c.a[0] + c.q * s;
        for (size_t j = 0; j < c.a.size(); ++j) {
            u64 tj = u64(i64(t1) + c.deltas[j]);
            for (u64 p : c.splitting_primes)
                CHECK(characters::splitting_type(tj, p) ==
                      characters::SplittingType::Split);
            for (u64 p : c.prime_list) CHECK(fields::g_eval(tj) % p != 0);
        }
    }
}

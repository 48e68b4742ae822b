#include <doctest.h>

#include <random>

#include "scf/fields.hpp"
#include "scf/numcore.hpp"
#include "scf/sieve.hpp"

using namespace scf;
using namespace scf::sieve;

TEST_CASE("g_roots_mod_p against direct scan") {
    for (u64 p : numcore::primes_up_to(500)) {
        std::vector<u64> oracle;
        for (u64 r = 0; r < p; ++r)
            if (fields::g_eval(r) % p == 0) oracle.push_back(r);
        auto got = g_roots_mod_p(p);
        std::sort(got.begin(), got.end());
        CHECK(got == oracle);
        // 2 never divides g; 3 divides g exactly at t = 0 mod 3.
        if (p == 2) CHECK(got.empty());
        if (p == 3) CHECK(got == std::vector<u64>{0});
        if (p > 3) CHECK((got.empty() || got.size() == 2));
    }
}

TEST_CASE("spec validation") {
    auto spec = SieveSpec::make(10000, 0.03, 0, 1, {0}, 0);
    CHECK_NOTHROW(spec.validate());
    CHECK(spec.window_hi() == 10299); // floor((1 + 0.03) * 10^4) in binary floating point
    CHECK(spec.z == SieveSpec::default_z(10000, 1, 1));

    CHECK_THROWS_AS(SieveSpec::make(10000, 0.001, 0, 1, {0}, 0).validate(), error);
    CHECK_THROWS_AS(SieveSpec::make(10000, 0.03, 5, 3, {0}, 0).validate(), error);  // a >= q
    CHECK_THROWS_AS(SieveSpec::make(10000, 0.03, 0, 1, {1, 0}, 0).validate(), error); // delta_1 != 0
    CHECK_THROWS_AS(SieveSpec::make(10000, 0.03, 0, 1, {0, 0}, 0).validate(), error); // repeated
    // floor = 3 requires 2 and 3 to divide q.
    CHECK_THROWS_AS(SieveSpec::make(10000, 0.03, 1, 7, {0}, 3).validate(), error);
    // ... and g(a) nonzero mod 3: a = 0 mod 3 fails.
    CHECK_THROWS_AS(SieveSpec::make(10000, 0.03, 6, 42, {0}, 3).validate(), error);
    CHECK_NOTHROW(SieveSpec::make(10000, 0.03, 1, 42, {0, 6}, 3).validate());
}

TEST_CASE("sieve equals brute force on fixed specs") {
    std::vector<SieveSpec> specs = {
        SieveSpec::make(10000, 0.03, 0, 1, {0}, 0),
        SieveSpec::make(10000, 0.05, 1, 42, {0, 6}, 3),
        SieveSpec::make(50000, 0.02, 1, 42, {0, 6, 12}, 3),
        SieveSpec::make(1000, 0.5, 1, 2, {0, 2}, 2),
    };
    // Also exercise an overridden (small) z so stage 2 is non-trivial.
    auto low_z = SieveSpec::make(10000, 0.03, 0, 1, {0}, 0);
    low_z.z = 20;
    low_z.z_overridden = true;
    specs.push_back(low_z);

    for (const auto& spec : specs) {
        auto a = sieve_survivors(spec);
        auto b = brute_force_survivors(spec);
        CHECK(a.survivors == b.survivors);
        CHECK(a.removed_stage1 == b.removed_stage1);
        CHECK(a.removed_stage2 == b.removed_stage2);
        CHECK(a.progression_size == b.progression_size);
        CHECK(a.n_alpha == a.survivors.size());
        CHECK(count_in_window(spec) == a.n_alpha);
        // With small z every survivor's g-values are squarefree (stage 2
        // covers all primes whose square can fit).
        if (spec.z_overridden)
            for (u64 t : a.survivors)
                for (u64 d : spec.offsets)
                    CHECK(numcore::is_squarefree(fields::g_eval(t + d)));
    }
}

TEST_CASE("sieve equals brute force on randomized specs") {
    std::mt19937_64 rng(20260826);
    int done = 0;
    while (done < 25) {
        u64 x = 500 + rng() % 8000;
        double alpha = 0.02 + double(rng() % 30) / 100.0;
        bool with_floor = rng() % 2;
        u64 q = with_floor ? 42 : 1;
        double floor = with_floor ? 3 : 0;
        u64 a = 0;
        std::vector<u64> offs{0};
        if (with_floor) {
            a = 1 + 6 * (rng() % 3); // 1, 7, 13: all nonzero mod 3
            if (rng() % 2) offs.push_back(6 + 6 * (rng() % 4));
        } else if (rng() % 2) {
            offs.push_back(1 + rng() % 20);
        }
        SieveSpec spec;
        try {
            spec = SieveSpec::make(x, alpha, a, q, offs, floor);
            if (rng() % 2) {
                spec.z = 10 + rng() % 1000;
                spec.z_overridden = true;
            }
            spec.validate();
        } catch (const error&) {
            continue; // e.g. duplicate offsets from the rng
        }
        auto s = sieve_survivors(spec);
        auto b = brute_force_survivors(spec);
        CHECK(s.survivors == b.survivors);
        CHECK(s.removed_stage1 == b.removed_stage1);
        CHECK(s.removed_stage2 == b.removed_stage2);
        ++done;
    }
}

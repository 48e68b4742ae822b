#ifndef SCF_EXPERIMENTS_HPP
#define SCF_EXPERIMENTS_HPP

#include <vector>

#include "scf/construct.hpp"
#include "scf/lfunc.hpp"

namespace scf::experiments {

struct CensusRow {
    u64 t = 0;
    u128 conductor = 0;
    u128 d = 0;
    long double regulator = 0;
    long double abs_l = 0;
    u64 h = 0;
    long double raw_h = 0;
    long double ratio = 0;
    u64 split_bound = 4; // largest P with every prime in [5, P] split; 4 if 5 is not split
    lfunc::LMethod backend = lfunc::LMethod::ExactGaussSum;
};

struct CensusSummary {
    u64 rows = 0;
    u64 above_main = 0;        // ratio >= (4/91) e^{2 gamma}
    u64 above_conjectural = 0; // ratio >= (16/91) e^{2 gamma}
    u64 above_grh = 0;         // ratio >= (64/91) e^{2 gamma}
    double rank_correlation = 0; // Spearman of (split_bound, ratio)
};

struct Census {
    std::vector<CensusRow> rows;
    CensusSummary summary;
};

/// One row per t <= t_max with g(t) squarefree (hence 3 does not divide t).
Census run_census(u64 t_max, long double A, lfunc::LMethod backend,
                  unsigned threads = 1);

/// log(D_large - D_small) / log(D_small); requires distinct discriminants >= 16.
double gap_exponent(u128 d_small, u128 d_large);

struct TupleReport {
    construct::TupleConstruction construction;
    std::vector<std::vector<CensusRow>> tuples;   // each sorted by discriminant
    std::vector<double> gap_exponents;            // max consecutive-gap exponent per tuple
    u128 window_x = 0;                            // X = (3/4) x; discriminants in [X, 2X]
    double alpha = 0;
    u64 progression_size = 0;
    u64 survivors = 0;
    u64 dropped_outside_window = 0;
    bool empty = false; // "no tuples at this scale"
};

/// Theorem-1 driver: construction + sieve over [x^{1/4}, (1+alpha) x^{1/4}],
/// alpha = (9/8)^{1/4} - 1, tuples normalized to X = (3/4) x.
TupleReport run_tuples(unsigned k, u128 x, double epsilon, long double A,
                       unsigned threads = 1);

/// Compute the census row for one field (exact backend when the conductor
/// permits, Euler product otherwise).
CensusRow census_row(u64 t, long double A, lfunc::LMethod backend, long double Q = 0);

u64 forced_split_bound(u64 t, u64 cap = 1000);

} // namespace scf::experiments

#endif

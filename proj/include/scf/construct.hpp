#ifndef SCF_CONSTRUCT_HPP
#define SCF_CONSTRUCT_HPP

#include <map>
#include <string>
#include <vector>

#include "scf/common.hpp"

namespace scf::construct {

/// CRT data for the k-tuple construction: residues forcing complete splitting
/// at every prime in [3k+2, eps log x] along the progression t = a_1 mod q.
struct TupleConstruction {
    unsigned k = 1;
    double epsilon = 0;
    u128 x = 0;
    double prime_bound = 0;        // eps * log x
    std::vector<u64> prime_list;   // all primes <= prime_bound
    std::vector<u64> splitting_primes; // subset in [3k+2, prime_bound]
    u64 q = 1;                     // product of prime_list
    std::vector<u64> a;            // a_1 .. a_k, each in [0, q)
    std::vector<i64> deltas;       // a_j - a_1 (may be negative)
    std::map<u64, std::vector<u64>> split_table; // p -> (t_{p,1} .. t_{p,k})
};

TupleConstruction build_construction(unsigned k, double epsilon, u128 x);

struct ValidationReport {
    u64 samples = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks, over sampled t = a_1 mod q, that every splitting prime splits
/// completely in each K_{t+delta_j} and that no p <= eps log x divides g(t+delta_j).
ValidationReport validate_construction(const TupleConstruction& c, u64 samples = 20);

} // namespace scf::construct

#endif

#ifndef SCF_LFUNC_HPP
#define SCF_LFUNC_HPP

#include <complex>

#include "scf/characters.hpp"
#include "scf/common.hpp"

namespace scf::lfunc {

enum class LMethod { EulerTruncated, ExactGaussSum, DirectSeries };

struct LEvaluation {
    std::complex<long double> value{0, 0};
    long double abs_value = 0;
    LMethod method = LMethod::ExactGaussSum;
    long double error_estimate = 0;
    // EulerTruncated metadata
    long double A = 0;
    long double Q = 0;
    u64 cutoff = 0;
    bool empty_product = false;
    // DirectSeries metadata
    u64 N = 0;
};

/// Truncated Euler product over primes p <= (log Q)^A, driven by splitting
/// types only: split (1-1/p)^-1, inert |1-omega/p|^-1, ramified 1.
/// abs_value is exact for the product; value is reported up to conjugation.
LEvaluation l1_euler_truncated(u64 t, long double A, long double Q);

/// Exact finite-sum oracle: L(1,chi) = tau(chibar)^{-1} sum_a chibar(a) (-Log(1 - e(a/q))).
/// Conductor must be <= 10^7.
LEvaluation l1_exact(const characters::CubicCharacter& chi);

std::complex<long double> gauss_sum(const characters::CubicCharacter& chi);

/// Second oracle: partial sum of chi(n)/n for n <= N, tail <= q log(q)/N.
LEvaluation l1_direct_series(const characters::CubicCharacter& chi, u64 N);

struct ClassNumber {
    u64 h = 0;
    long double raw = 0;
    LMethod backend = LMethod::ExactGaussSum;
};

/// Class number via h = sqrt(d) |L(1,chi)|^2 / (4R). With the exact backend
/// the raw value must be within 1e-3 of a positive integer, else internal_error.
/// Q = 0 picks sqrt(2) * g(t) for the Euler backend.
ClassNumber class_number(u64 t, LMethod method = LMethod::ExactGaussSum,
                         long double A = 4.0L, long double Q = 0.0L);

inline constexpr long double kEulerGamma = 0.57721566490153286060651209L;

/// h / (sqrt(d) (log log d / log d)^2); requires d >= 16.
long double extremality_ratio(u64 t, long double h_value);

long double threshold_main();       // (4/91)  e^{2 gamma} ~ 0.13944
long double threshold_conjectural(); // (16/91) e^{2 gamma} ~ 0.5578
long double threshold_grh();         // (64/91) e^{2 gamma} ~ 2.2311

} // namespace scf::lfunc

#endif

#include "scf/lfunc.hpp"

#include <cfloat>
#include <cmath>

#include "scf/fields.hpp"
#include "scf/numcore.hpp"

namespace scf::lfunc {

using characters::CharTable;
using characters::CubicCharacter;
using characters::SplittingType;

LEvaluation l1_euler_truncated(u64 t, long double A, long double Q) {
    if (A < 1) throw error("l1_euler_truncated: A must be >= 1");
    u128 g = fields::g_eval(t);
    if ((long double)Q < to_ld(g))
        throw error("l1_euler_truncated: Q must be >= conductor");
    LEvaluation out;
    out.method = LMethod::EulerTruncated;
    out.A = A;
    out.Q = Q;
    long double cutoff_ld = std::pow(std::log(Q), A);
    out.cutoff = cutoff_ld >= 2 ? u64(cutoff_ld) : 0;
    if (out.cutoff < 2) {
        out.value = {1, 0};
        out.abs_value = 1;
        out.empty_product = true;
        return out;
    }
    // |L|^2 in real arithmetic sidesteps the chi-vs-chibar ambiguity:
    // split p: (1-1/p)^-2, inert p: (1 + 1/p + 1/p^2)^-1, ramified: 1.
    long double log_abs2 = 0;
    for (u64 p : numcore::primes_up_to(out.cutoff)) {
        SplittingType s = characters::splitting_type(t, p);
        long double pd = (long double)p;
        if (s == SplittingType::Split)
            log_abs2 += -2 * std::log1p(-1 / pd);
        else if (s == SplittingType::Inert)
            log_abs2 += -std::log1p(1 / pd + 1 / (pd * pd));
    }
    out.abs_value = std::exp(log_abs2 / 2);
    out.value = {out.abs_value, 0}; // reported up to conjugation
    out.error_estimate = 0;         // exact for the product itself
    return out;
}

namespace {

constexpr long double kPi = 3.14159265358979323846264338328L;

// Per-class trigonometric accumulators over a = 1..q-1 grouped by chi-class.
struct ClassSums {
    std::complex<long double> expo[3] = {};  // sum of e(a/q)
    long double log2sin[3] = {0, 0, 0};      // sum of log(2 sin(pi a / q))
    long double angle[3] = {0, 0, 0};        // sum of (pi a / q - pi/2)
};

ClassSums accumulate(const CharTable& tab) {
    ClassSums s;
    u64 q = tab.conductor();
    for (u64 a = 1; a < q; ++a) {
        int c = tab.cls(a);
        if (c < 0) continue;
        long double frac = (long double)a / (long double)q;
        s.expo[c] += std::complex<long double>(std::cos(2 * kPi * frac),
                                               std::sin(2 * kPi * frac));
        s.log2sin[c] += std::log(2 * std::sin(kPi * frac));
        s.angle[c] += kPi * frac - kPi / 2;
    }
    return s;
}

std::complex<long double> gauss_from_sums(const ClassSums& s, int conj) {
    std::complex<long double> tau{0, 0};
    for (int c = 0; c < 3; ++c)
        tau += characters::omega_pow(conj ? (3 - c) % 3 : c) * s.expo[c];
    return tau;
}

} // namespace

std::complex<long double> gauss_sum(const CubicCharacter& chi) {
    if (chi.conductor > 10000000)
        throw error("gauss_sum: conductor above the 10^7 cost limit");
    CharTable tab(chi);
    return gauss_from_sums(accumulate(tab), 0);
}

LEvaluation l1_exact(const CubicCharacter& chi) {
    u64 q = chi.conductor;
    if (q > 10000000) throw error("l1_exact: conductor above the 10^7 cost limit");
    if (chi.chi_class(q - 1) != 0)
        throw error("l1_exact: character is not even");
    CharTable tab(chi);
    ClassSums s = accumulate(tab);
    // L(1,chi) = tau(chibar)^{-1} * sum_a chibar(a) * (-Log(1 - e(a/q))), with
    // Log(1 - e(a/q)) = log(2 sin(pi a/q)) + i (pi a/q - pi/2).
    std::complex<long double> tau_bar = gauss_from_sums(s, 1);
    std::complex<long double> sum{0, 0};
    for (int c = 0; c < 3; ++c) {
        std::complex<long double> w = characters::omega_pow((3 - c) % 3); // chibar on class c
        sum += w * std::complex<long double>(-s.log2sin[c], -s.angle[c]);
    }
    LEvaluation out;
    out.method = LMethod::ExactGaussSum;
    out.value = sum / tau_bar;
    out.abs_value = std::abs(out.value);
    out.error_estimate = 64 * LDBL_EPSILON * std::log((long double)q) *
                         std::sqrt((long double)q);
    return out;
}

LEvaluation l1_direct_series(const CubicCharacter& chi, u64 N) {
    u64 q = chi.conductor;
    if (N < q) throw error("l1_direct_series: N must be >= conductor");
    CharTable tab(chi);
    // Group 1/n by chi-class; combine with omega powers at the end.
    long double h[3] = {0, 0, 0};
    for (u64 n = 1; n <= N; ++n) {
        int c = tab.cls(n % q);
        if (c >= 0) h[c] += 1.0L / (long double)n;
    }
    LEvaluation out;
    out.method = LMethod::DirectSeries;
    out.N = N;
    for (int c = 0; c < 3; ++c) out.value += characters::omega_pow(c) * h[c];
    out.abs_value = std::abs(out.value);
    out.error_estimate = (long double)q * std::log((long double)q) / (long double)N;
    return out;
}

ClassNumber class_number(u64 t, LMethod method, long double A, long double Q) {
    u128 g = fields::g_eval(t);
    if (t % 3 == 0 || !numcore::is_squarefree(g))
        throw error("class_number: t=" + std::to_string(t) +
                    " has non-squarefree conductor or 3 | t");
    fields::RegulatorResult reg = fields::regulator(t);
    long double abs_l = 0;
    switch (method) {
        case LMethod::ExactGaussSum:
            abs_l = l1_exact(characters::build_character(t)).abs_value;
            break;
        case LMethod::EulerTruncated: {
            long double q_eff = Q > 0 ? Q : std::sqrt(2.0L) * to_ld(g);
            abs_l = l1_euler_truncated(t, A, q_eff).abs_value;
            break;
        }
        case LMethod::DirectSeries: {
            auto chi = characters::build_character(t);
            abs_l = l1_direct_series(chi, 50 * chi.conductor).abs_value;
            break;
        }
    }
    // sqrt(d) = g for d = g^2.
    long double raw = to_ld(g) * abs_l * abs_l / (4 * reg.value);
    ClassNumber out;
    out.raw = raw;
    out.backend = method;
    long double rounded = std::floor(raw + 0.5L);
    out.h = rounded < 1 ? 0 : u64(rounded);
    if (method == LMethod::ExactGaussSum) {
        if (std::fabs(raw - rounded) > 1e-3L || rounded < 1)
            throw internal_error("class_number: integrality violated at t=" +
                                 std::to_string(t) + ", raw=" +
                                 std::to_string((double)raw));
    }
    if (out.h == 0) out.h = 1; // non-exact backends round up from below
    return out;
}

long double extremality_ratio(u64 t, long double h_value) {
    auto d_opt = fields::discriminant(t);
    if (!d_opt) throw error("extremality_ratio: discriminant absent (g(t) not squarefree)");
    u128 d = *d_opt;
    if (d < 16) throw error("extremality_ratio: d too small");
    long double logd = std::log(to_ld(d));
    long double loglogd = std::log(logd);
    long double denom = std::sqrt(to_ld(d)) * (loglogd / logd) * (loglogd / logd);
    return h_value / denom;
}

long double threshold_main() { return 4.0L / 91 * std::exp(2 * kEulerGamma); }
long double threshold_conjectural() { return 16.0L / 91 * std::exp(2 * kEulerGamma); }
long double threshold_grh() { return 64.0L / 91 * std::exp(2 * kEulerGamma); }

} // namespace scf::lfunc

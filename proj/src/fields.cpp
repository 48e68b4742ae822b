#include "scf/fields.hpp"

#include <cfloat>
#include <cmath>

#include "scf/numcore.hpp"

static_assert(LDBL_MANT_DIG >= 60, "need >= 60 mantissa bits for regulator logs");

namespace scf::fields {

u128 g_eval(u64 t) {
    // t^2 can exceed 64 bits for t >= 2^32.
    return (u128)t * t + 3 * (u128)t + 9;
}

SimplestCubicField make_field(u64 t) {
    SimplestCubicField f;
    f.t = t;
    f.conductor = g_eval(t);
    f.squarefree_conductor = numcore::is_squarefree(f.conductor);
    if (f.squarefree_conductor) f.discriminant = f.conductor * f.conductor;
    return f;
}

std::optional<u128> discriminant(u64 t) {
    u128 g = g_eval(t);
    if (!numcore::is_squarefree(g)) return std::nullopt;
    return g * g;
}

long double f_eval(u64 t, long double x) {
    long double td = (long double)t;
    return ((x - td) * x - (td + 3)) * x - 1;
}

namespace {

long double f_deriv(u64 t, long double x) {
    long double td = (long double)t;
    return (3 * x - 2 * td) * x - (td + 3);
}

// Bisection on a bracket with known signs f(lo) < 0 < f(hi) or the reverse,
// then Newton polish.
long double refine_root(u64 t, long double lo, long double hi) {
    long double flo = f_eval(t, lo);
    for (int i = 0; i < 90; ++i) {
        long double mid = (lo + hi) / 2;
        long double fm = f_eval(t, mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if (hi - lo < 1e-18L * (1 + std::fabs(lo))) break;
    }
    long double x = (lo + hi) / 2;
    for (int i = 0; i < 4; ++i) {
        long double d = f_deriv(t, x);
        if (d == 0) break;
        long double step = f_eval(t, x) / d;
        long double nx = x - step;
        if (nx < lo || nx > hi) break;
        x = nx;
    }
    return x;
}

} // namespace

RootTriple roots(u64 t, long double target_precision) {
    if (target_precision <= 0) throw error("roots: target_precision must be positive");
    long double td = (long double)t;
    // Brackets from the family's asymptotics:
    //   rho1 in (t, t+2): f(t) = -t^2-3t-1 < 0, f(t+2) = t^2+3t+1 > 0
    //   rho2 in (-2, -1): f(-2) = -2t-3 < 0,   f(-1) = 1 > 0
    //   rho3 in (-1, 0):  f(-1) = 1 > 0,       f(0) = -1 < 0
    RootTriple r;
    r.rho1 = refine_root(t, td, td + 2);
    r.rho2 = refine_root(t, -2.0L, -1.0L);
    r.rho3 = refine_root(t, -1.0L, 0.0L);

    long double err = 0;
    for (long double x : {r.rho1, r.rho2, r.rho3}) {
        long double d = std::fabs(f_deriv(t, x));
        long double e = d > 0 ? std::fabs(f_eval(t, x)) / d : 1.0L;
        e += 8 * LDBL_EPSILON * (1 + std::fabs(x));
        if (e > err) err = e;
    }
    r.error_bound = err;
    if (err > target_precision)
        throw error("roots: failed to reach requested precision for t=" +
                    std::to_string(t) + " (achieved " + std::to_string((double)err) + ")");
    return r;
}

RegulatorResult regulator(u64 t) {
    u128 g = g_eval(t);
    if (!numcore::is_squarefree(g))
        throw error("regulator: conductor g(t) not squarefree for t=" + std::to_string(t));
    RootTriple r = roots(t, 1e-9L);
    // Units eps1 = rho, eps2 = -1/(1+rho); rows are log|.| at the embeddings
    // rho -> rho1 and rho -> rho2.
    long double a11 = std::log(std::fabs(r.rho1));
    long double a12 = std::log(std::fabs(r.rho2));
    long double a21 = -std::log(std::fabs(1 + r.rho1));
    long double a22 = -std::log(std::fabs(1 + r.rho2));
    RegulatorResult out;
    out.value = std::fabs(a11 * a22 - a12 * a21);
    // A root error e moves log|x| by about e/|x|; 1+rho2 is the small quantity.
    long double e = r.error_bound;
    long double e11 = e / std::fabs(r.rho1), e12 = e / std::fabs(r.rho2);
    long double e21 = e / std::fabs(1 + r.rho1), e22 = e / std::fabs(1 + r.rho2);
    out.error_bound = std::fabs(a22) * e11 + std::fabs(a11) * e22 +
                      std::fabs(a21) * e12 + std::fabs(a12) * e21 +
                      32 * LDBL_EPSILON * (1 + out.value);
    return out;
}

} // namespace scf::fields

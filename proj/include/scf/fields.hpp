#ifndef SCF_FIELDS_HPP
#define SCF_FIELDS_HPP

#include <optional>

#include "scf/common.hpp"

namespace scf::fields {

/// Conductor polynomial g(t) = t^2 + 3t + 9.
u128 g_eval(u64 t);

/// Simplest cubic field K_t, generated by a root of
/// f_t(x) = x^3 - t x^2 - (t+3) x - 1.
struct SimplestCubicField {
    u64 t = 0;
    u128 conductor = 0;
    bool squarefree_conductor = false;
    std::optional<u128> discriminant; // g(t)^2, present iff g(t) squarefree
};

SimplestCubicField make_field(u64 t);

/// Discriminant g(t)^2 when g(t) is squarefree, absent otherwise.
std::optional<u128> discriminant(u64 t);

/// The three real roots of f_t with a shared absolute error bound:
/// rho1 in (t, t+2), rho2 in (-2, -1), rho3 in (-1, 0).
struct RootTriple {
    long double rho1 = 0, rho2 = 0, rho3 = 0;
    long double error_bound = 0;
};

long double f_eval(u64 t, long double x);

RootTriple roots(u64 t, long double target_precision = 1e-9L);

struct RegulatorResult {
    long double value = 0;
    long double error_bound = 0;
};

/// Regulator of the unit pair (rho, -1/(1+rho)) from the log-embedding
/// determinant. Requires g(t) squarefree.
RegulatorResult regulator(u64 t);

} // namespace scf::fields

#endif

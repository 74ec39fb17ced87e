#pragma once

// Numerical shadow of the Hartshorne-Serre correspondence between rank-3
// bundles on P^3 and space curves: 0 -> O^2 -> F -> I_Y(c1) -> 0.

#include <cstdint>

#include "p3/chern.hpp"

namespace p3 {

/// Degree and arithmetic genus of a curve in P^3. These are formal invariant
/// pairs; nothing checks that such a curve exists.
struct CurveInvariants {
    std::int64_t d = 1;
    std::int64_t g = 0;
    bool rational = false;
    bool nondegenerate = false;

    /// Throws DomainError if d < 1 or if `rational` is set with g != 0.
    static CurveInvariants make(std::int64_t d, std::int64_t g, bool rational = false,
                                bool nondegenerate = false);

    friend bool operator==(const CurveInvariants&, const CurveInvariants&) = default;
};

enum class BinomConvention {
    /// binom(a,3) = 0 for a < 3: dimensions of spaces of sections.
    truncated,
    /// binom(a,3) = a(a-1)(a-2)/6 for every a: Euler characteristics.
    polynomial,
};

Rational binom3(std::int64_t a, BinomConvention conv);

/// d = c2, g = (c3 - 4c2 + c1c2 + 2)/2.
CurveInvariants bundle_to_curve(const ChernData& bundle);

/// (3, c1, d, 2g - 2 + 4d - c1 d).
ChernData curve_to_bundle(const CurveInvariants& cv, std::int64_t c1);

/// chi(F(m)) = 2 binom(m+3,3) + binom(m+c1+3,3) - (m+c1)d - 1 + g.
std::int64_t chi_curve_form(std::int64_t c1, std::int64_t d, std::int64_t g, std::int64_t m,
                            BinomConvention conv = BinomConvention::truncated);

/// Degree of det N_Y (x) O_Y(-3) for a smooth rational curve of degree n+3
/// whose normal bundle is O_Y((2n+5)pt)^2.
std::int64_t rational_normal_twist_degree(std::int64_t n);

/// A line bundle of degree `deg` on P^1 is generated by two global sections.
bool generated_by_two_sections(std::int64_t deg);

/// chi(I_Y(t)) = binom(t+3,3) - (dt + 1 - g).
std::int64_t chi_ideal_sheaf(const CurveInvariants& cv, std::int64_t t,
                             BinomConvention conv = BinomConvention::polynomial);

/// Minimal h^0(F(1)) for a rank-r generalized 't Hooft bundle.
std::int64_t thooft_threshold(std::int64_t rank);

/// chi(F(1)) for a rank-3 instanton of charge n, 12 - 3n.
std::int64_t chi_f1_charge(std::int64_t n);

} // namespace p3

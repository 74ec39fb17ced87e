#include "p3/curvelink.hpp"

#include "p3/errors.hpp"
#include "p3/faults.hpp"

namespace p3 {

namespace {

std::int64_t dict_c2_coeff()
{
    return faultable<std::int64_t>(Fault::dict_c2, 4, 3);
}

std::int64_t dict_c1c2_sign()
{
    return faultable<std::int64_t>(Fault::dict_c1c2_sign, 1, -1);
}

std::int64_t dict_genus_shift()
{
    return faultable<std::int64_t>(Fault::dict_genus_shift, 2, 4);
}

void require_charge(std::int64_t n)
{
    if (n < 2)
        throw DomainError("charge must be at least 2, got " + std::to_string(n));
}

} // namespace

CurveInvariants CurveInvariants::make(std::int64_t d, std::int64_t g, bool rational,
                                      bool nondegenerate)
{
    if (d < 1)
        throw DomainError("curve degree must be positive, got " + std::to_string(d));
    if (rational && g != 0)
        throw DomainError("a rational curve has genus 0, got " + std::to_string(g));
    return {d, g, rational, nondegenerate};
}

Rational binom3(std::int64_t a, BinomConvention conv)
{
    if (conv == BinomConvention::truncated && a < 3)
        return 0;
    const Rational x = make_rational(a);
    return x * (x - 1) * (x - 2) / 6;
}

CurveInvariants bundle_to_curve(const ChernData& bundle)
{
    require_rank3(bundle, "the curve dictionary");
    if (!validate_parity(bundle))
        throw ParityViolation("c3 - c1 c2 is odd for " + to_string(bundle) +
                              "; the associated genus would not be an integer");
    if (bundle.c2 < 1)
        throw DomainError("the associated curve needs c2 >= 1, got " + to_string(bundle));
    const std::int64_t twice_g = bundle.c3 - dict_c2_coeff() * bundle.c2 +
                                 dict_c1c2_sign() * bundle.c1 * bundle.c2 + dict_genus_shift();
    if (twice_g % 2 != 0)
        throw ParityViolation("non-integral genus for " + to_string(bundle));
    const std::int64_t g = twice_g / 2;
    return CurveInvariants::make(bundle.c2, g, g == 0);
}

ChernData curve_to_bundle(const CurveInvariants& cv, std::int64_t c1)
{
    const std::int64_t c3 = 2 * cv.g - dict_genus_shift() + dict_c2_coeff() * cv.d -
                            dict_c1c2_sign() * c1 * cv.d;
    return {3, c1, cv.d, c3};
}

std::int64_t chi_curve_form(std::int64_t c1, std::int64_t d, std::int64_t g, std::int64_t m,
                            BinomConvention conv)
{
    if (d < 1)
        throw DomainError("curve degree must be positive, got " + std::to_string(d));
    const Rational trivial = faultable(Fault::curve_trivial_sections, make_rational(2),
                                       make_rational(1));
    const Rational chi = trivial * binom3(m + 3, conv) + binom3(m + c1 + 3, conv) -
                         make_rational((m + c1) * d) - 1 + make_rational(g);
    return to_int64(chi);
}

std::int64_t rational_normal_twist_degree(std::int64_t n)
{
    require_charge(n);
    const std::int64_t summand = 2 * n + faultable<std::int64_t>(Fault::normal_bundle_degree, 5, 4);
    const std::int64_t det = 2 * summand;
    const std::int64_t canonical = faultable<std::int64_t>(Fault::normal_canonical_twist, 3, 2);
    return det - canonical * (n + 3);
}

bool generated_by_two_sections(std::int64_t deg)
{
    return deg >= 1;
}

std::int64_t chi_ideal_sheaf(const CurveInvariants& cv, std::int64_t t, BinomConvention conv)
{
    return to_int64(binom3(t + 3, conv) - make_rational(cv.d * t + 1 - cv.g));
}

std::int64_t thooft_threshold(std::int64_t rank)
{
    if (rank < 2)
        throw DomainError("'t Hooft threshold needs rank >= 2, got " + std::to_string(rank));
    return rank - faultable<std::int64_t>(Fault::thooft_offset, 1, 2);
}

std::int64_t chi_f1_charge(std::int64_t n)
{
    require_charge(n);
    return euler_characteristic({3, 0, n, 0}, 1);
}

} // namespace p3

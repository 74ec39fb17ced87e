#include "p3/chern.hpp"

#include <cassert>
#include <ostream>

#include "p3/errors.hpp"
#include "p3/faults.hpp"

namespace p3 {

namespace {

Rational q(std::int64_t v)
{
    return make_rational(v);
}

Rational ch_quadratic_den()
{
    return faultable(Fault::ch_quadratic_half, q(2), q(3));
}

Rational ch_cubic_den()
{
    return faultable(Fault::ch_cubic_sixth, q(6), q(5));
}

Rational ch_cubic_c1c2()
{
    return faultable(Fault::ch_cubic_c1c2, q(3), q(2));
}

Rational ch_cubic_c3()
{
    return faultable(Fault::ch_cubic_c3, q(3), q(2));
}

} // namespace

std::string to_string(const ChernData& d)
{
    return "(" + std::to_string(d.rank) + "," + std::to_string(d.c1) + "," +
           std::to_string(d.c2) + "," + std::to_string(d.c3) + ")";
}

std::ostream& operator<<(std::ostream& os, const ChernData& d)
{
    return os << to_string(d);
}

void require_valid(const ChernData& d)
{
    if (d.rank < 1)
        throw DomainError("rank must be positive, got " + std::to_string(d.rank));
}

void require_rank3(const ChernData& d, const char* what)
{
    if (d.rank != 3)
        throw RankUnsupported(std::string(what) + " is defined for rank 3 only, got rank " +
                              std::to_string(d.rank));
}

ChiPolynomial::ChiPolynomial(Polynomial p) : poly_(std::move(p)) {}

Rational ChiPolynomial::operator()(std::int64_t m) const
{
    return poly_(q(m));
}

ChowClass chern_character(const ChernData& d)
{
    require_valid(d);
    const Rational c1 = q(d.c1), c2 = q(d.c2), c3 = q(d.c3);
    return {q(d.rank),
            c1,
            (c1 * c1 - 2 * c2) / ch_quadratic_den(),
            (c1 * c1 * c1 - ch_cubic_c1c2() * c1 * c2 + ch_cubic_c3() * c3) / ch_cubic_den()};
}

ChernData chern_from_character(const ChowClass& x, std::int64_t rank)
{
    if (rank < 1)
        throw DomainError("rank must be positive, got " + std::to_string(rank));
    if (x[0] != rank)
        throw DomainError("degree-0 part " + to_string(x[0]) + " does not match rank " +
                          std::to_string(rank));
    // Newton relations, solved upward.
    const Rational c1 = x[1];
    const Rational c2 = (c1 * c1 - ch_quadratic_den() * x[2]) / 2;
    const Rational c3 = (ch_cubic_den() * x[3] - c1 * c1 * c1 + ch_cubic_c1c2() * c1 * c2) /
                        ch_cubic_c3();
    for (const Rational* c : {&c1, &c2, &c3}) {
        if (!is_integer(*c))
            throw NonIntegralChernClass("character " + to_string(x) + " of rank " +
                                        std::to_string(rank) +
                                        " has non-integral Chern class " + to_string(*c));
    }
    return {rank, to_int64(c1), to_int64(c2), to_int64(c3)};
}

ChernData dual(const ChernData& d)
{
    return {d.rank, -d.c1, d.c2, -d.c3};
}

ChernData twist(const ChernData& d, std::int64_t k)
{
    return chern_from_character(chern_character(d) * exp_line(k), d.rank);
}

std::int64_t euler_characteristic(const ChernData& d, std::int64_t m)
{
    const Rational chi = degree(chern_character(twist(d, m)) * todd_p3());
    if (!is_integer(chi))
        throw NonIntegralChi("chi(F(" + std::to_string(m) + ")) = " + to_string(chi) +
                             " is not an integer for Chern data " + to_string(d));
    return to_int64(chi);
}

ChiPolynomial chi_polynomial(const ChernData& d)
{
    // deg(ch(F) e^{mH} td) = sum_k [ch(F) td]_{3-k} m^k / k!
    const ChowClass base = chern_character(d) * todd_p3();
    static const Rational kInvFactorial[] = {1, 1, make_rational(1, 2), make_rational(1, 6)};
    std::vector<Rational> coeffs(4);
    for (int k = 0; k <= 3; ++k)
        coeffs[static_cast<std::size_t>(k)] = base[3 - k] * kInvFactorial[k];
    return ChiPolynomial(Polynomial(std::move(coeffs)));
}

Rational chi_rank3_closed_form(const ChernData& d, std::int64_t m)
{
    require_rank3(d, "the rank-3 chi expansion");
    const Rational c1 = q(d.c1), c2 = q(d.c2), c3 = q(d.c3), mm = q(m);
    const Rational k_const = faultable(Fault::chi2_const, q(3), q(2));
    const Rational k_c1 = faultable(Fault::chi2_c1, make_rational(11, 6), make_rational(11, 5));
    const Rational k_m = faultable(Fault::chi2_m, make_rational(11, 2), make_rational(9, 2));
    const Rational k_m2 = faultable(Fault::chi2_m2, q(3), q(2));
    const Rational k_mc1 = faultable(Fault::chi2_mc1, q(2), q(1));
    Rational chi = (c1 * c1 * c1 - 3 * c1 * c2 + 3 * c3) / 6;
    chi += mm * (c1 * c1 - 2 * c2) / 2;
    chi += mm * mm * c1 / 2;
    chi += mm * mm * mm / 2;
    chi += c1 * c1 - 2 * c2;
    chi += k_mc1 * mm * c1;
    chi += k_m2 * mm * mm;
    chi += k_c1 * c1;
    chi += k_m * mm;
    chi += k_const;
    return chi;
}

std::int64_t chi_endomorphisms(const ChernData& d)
{
    require_rank3(d, "chi(F tensor F*)");
    const Rational chi =
        degree(chern_character(d) * chern_character(dual(d)) * todd_p3());
    if (!is_integer(chi))
        throw NonIntegralChi("chi(F tensor F*) = " + to_string(chi) + " for " + to_string(d));
    return to_int64(chi);
}

std::int64_t chi_endomorphisms_closed_form(const ChernData& d)
{
    require_rank3(d, "chi(F tensor F*)");
    const std::int64_t a = faultable<std::int64_t>(Fault::chi_end_c1sq, 4, 5);
    const std::int64_t b = faultable<std::int64_t>(Fault::chi_end_c2, -12, -11);
    const std::int64_t c = faultable<std::int64_t>(Fault::chi_end_const, 9, 8);
    return a * d.c1 * d.c1 + b * d.c2 + c;
}

bool validate_parity(const ChernData& d)
{
    require_rank3(d, "the parity condition");
    return (d.c3 - d.c1 * d.c2) % 2 == 0;
}

} // namespace p3

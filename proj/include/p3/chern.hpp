#pragma once

// Chern-class bookkeeping on P^3: character <-> class conversion, duals,
// twists, and Euler characteristics via Hirzebruch-Riemann-Roch.

#include <cstdint>
#include <iosfwd>
#include <string>

#include "p3/chowring.hpp"
#include "p3/polynomial.hpp"

namespace p3 {

/// Topological type (rank, c1, c2, c3) of a sheaf on P^3.
struct ChernData {
    std::int64_t rank = 1;
    std::int64_t c1 = 0;
    std::int64_t c2 = 0;
    std::int64_t c3 = 0;

    friend bool operator==(const ChernData&, const ChernData&) = default;
};

std::string to_string(const ChernData& d);
std::ostream& operator<<(std::ostream& os, const ChernData& d);

/// Throws DomainError unless rank >= 1.
void require_valid(const ChernData& d);

/// chi(F(m)) as an exact cubic in m.
class ChiPolynomial {
public:
    explicit ChiPolynomial(Polynomial p);

    const Polynomial& polynomial() const { return poly_; }
    Rational coeff(int k) const { return poly_.coeff(k); }
    Rational operator()(std::int64_t m) const;

    friend bool operator==(const ChiPolynomial&, const ChiPolynomial&) = default;

private:
    Polynomial poly_;
};

ChowClass chern_character(const ChernData& d);

/// Inverse of chern_character. Throws NonIntegralChernClass if the recovered
/// classes are not integers, DomainError if the rank does not match H^0.
ChernData chern_from_character(const ChowClass& x, std::int64_t rank);

ChernData dual(const ChernData& d);

/// Chern data of F(k), computed through the character.
ChernData twist(const ChernData& d, std::int64_t k);

/// chi(F(m)) by Riemann-Roch in the Chow ring. Throws NonIntegralChi.
std::int64_t euler_characteristic(const ChernData& d, std::int64_t m);

ChiPolynomial chi_polynomial(const ChernData& d);

/// Coefficient-by-coefficient transcription of the rank-3 expansion
///   chi(F(m)) = (c1^3 - 3c1c2 + 3c3)/6 + m(c1^2 - 2c2)/2 + m^2 c1/2 + m^3/2
///             + (c1^2 - 2c2) + 2m c1 + 3m^2 + 11c1/6 + 11m/2 + 3.
/// Kept separate from euler_characteristic so the two can check each other.
Rational chi_rank3_closed_form(const ChernData& d, std::int64_t m);

/// chi(F tensor F^*) through the Chow ring. Rank 3 only.
std::int64_t chi_endomorphisms(const ChernData& d);

/// 4c1^2 - 12c2 + 9. Rank 3 only.
std::int64_t chi_endomorphisms_closed_form(const ChernData& d);

/// True iff c3 - c1c2 is even. Rank 3 only.
bool validate_parity(const ChernData& d);

void require_rank3(const ChernData& d, const char* what);

} // namespace p3

#pragma once

// Dense univariate polynomials over Q, with the exact real-root counting
// (square-free decomposition and Sturm sequences) used to place the sign
// changes of Euler-characteristic cubics.

#include <cstdint>
#include <string>
#include <vector>

#include "p3/rational.hpp"

namespace p3 {

class Polynomial {
public:
    Polynomial() = default;
    /// Coefficients from the constant term upward; trailing zeros are trimmed.
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial constant(Rational c);
    /// The monomial x.
    static Polynomial x();

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int k) const;
    Rational leading() const;

    Rational operator()(const Rational& at) const;

    Polynomial derivative() const;
    Polynomial monic() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Rational> coeffs_;
};

struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};

/// Euclidean division; throws DomainError on a zero divisor.
DivMod divmod(const Polynomial& num, const Polynomial& den);

/// Monic greatest common divisor (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Yun's decomposition: result[i] is the monic product of the irreducible
/// factors of multiplicity i+1. Input must be nonzero.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

/// Monic square-free polynomial whose roots are exactly the roots of p with
/// odd multiplicity. These are the roots where p changes sign.
Polynomial odd_multiplicity_part(const Polynomial& p);

/// Sign of p just to the left of +infinity / right of -infinity.
int sign_at_infinity(const Polynomial& p, bool positive);

/// Number of distinct real roots of a square-free p strictly below t.
std::int64_t count_roots_below(const Polynomial& squarefree, const Rational& t);

/// Number of distinct real roots of a square-free p.
std::int64_t count_real_roots(const Polynomial& squarefree);

int sign(const Rational& r);

std::string to_string(const Polynomial& p, const std::string& var = "m");

} // namespace p3

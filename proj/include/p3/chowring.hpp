#pragma once

// The rational Chow ring of P^3, A = Q[H]/(H^4).

#include <array>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>

#include "p3/rational.hpp"

namespace p3 {

class ChowClass {
public:
    static constexpr int kTopDegree = 3;

    ChowClass() = default;
    ChowClass(Rational a0, Rational a1, Rational a2, Rational a3);

    /// Coefficient of H^k, 0 <= k <= 3.
    const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    const std::array<Rational, 4>& coeffs() const { return coeffs_; }

    ChowClass& operator+=(const ChowClass& rhs);
    ChowClass& operator-=(const ChowClass& rhs);
    ChowClass& operator*=(const ChowClass& rhs);
    ChowClass& operator*=(const Rational& s);

    friend ChowClass operator+(ChowClass lhs, const ChowClass& rhs) { return lhs += rhs; }
    friend ChowClass operator-(ChowClass lhs, const ChowClass& rhs) { return lhs -= rhs; }
    friend ChowClass operator*(ChowClass lhs, const ChowClass& rhs) { return lhs *= rhs; }
    friend ChowClass operator*(ChowClass lhs, const Rational& s) { return lhs *= s; }
    friend ChowClass operator*(const Rational& s, ChowClass rhs) { return rhs *= s; }
    ChowClass operator-() const;

    friend bool operator==(const ChowClass& a, const ChowClass& b) { return a.coeffs_ == b.coeffs_; }

    /// The unit class 1.
    static ChowClass one();
    /// The hyperplane class H.
    static ChowClass hyperplane();

private:
    std::array<Rational, 4> coeffs_{};
};

/// Truncated exponential of kH: the Chern character of O(k).
ChowClass exp_line(std::int64_t k);

/// Todd class of P^3: 1 + 2H + 11/6 H^2 + H^3.
ChowClass todd_p3();

/// Integral over P^3, i.e. the H^3 coefficient.
Rational degree(const ChowClass& x);

std::string to_string(const ChowClass& x);
std::ostream& operator<<(std::ostream& os, const ChowClass& x);

} // namespace p3

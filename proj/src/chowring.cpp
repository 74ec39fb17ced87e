#include "p3/chowring.hpp"

#include <ostream>

#include "p3/faults.hpp"

namespace p3 {

ChowClass::ChowClass(Rational a0, Rational a1, Rational a2, Rational a3)
    : coeffs_{std::move(a0), std::move(a1), std::move(a2), std::move(a3)}
{
    for (auto& c : coeffs_)
        c.canonicalize();
}

ChowClass& ChowClass::operator+=(const ChowClass& rhs)
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& rhs)
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

ChowClass& ChowClass::operator*=(const ChowClass& rhs)
{
    std::array<Rational, 4> out{};
    // H^4 = 0: only pairs with i + j <= 3 survive.
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; i + j < 4; ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    coeffs_ = std::move(out);
    return *this;
}

ChowClass& ChowClass::operator*=(const Rational& s)
{
    for (auto& c : coeffs_)
        c *= s;
    return *this;
}

ChowClass ChowClass::operator-() const
{
    ChowClass r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

ChowClass ChowClass::one()
{
    return {1, 0, 0, 0};
}

ChowClass ChowClass::hyperplane()
{
    return {0, 1, 0, 0};
}

ChowClass exp_line(std::int64_t k)
{
    const Rational kk = make_rational(k);
    const Rational cubic_den = faultable(Fault::exp_cubic, make_rational(6), make_rational(5));
    return {1, kk, kk * kk / 2, kk * kk * kk / cubic_den};
}

ChowClass todd_p3()
{
    return {1,
            faultable(Fault::todd_h1, make_rational(2), make_rational(3)),
            faultable(Fault::todd_h2, make_rational(11, 6), make_rational(11, 5)),
            faultable(Fault::todd_h3, make_rational(1), make_rational(2))};
}

Rational degree(const ChowClass& x)
{
    return x[3];
}

std::string to_string(const ChowClass& x)
{
    std::string s = "(";
    for (int i = 0; i < 4; ++i) {
        if (i)
            s += ",";
        s += to_string(x[i]);
    }
    return s + ")";
}

std::ostream& operator<<(std::ostream& os, const ChowClass& x)
{
    return os << to_string(x);
}

} // namespace p3

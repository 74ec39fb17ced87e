#include "p3/polynomial.hpp"

#include <utility>

#include "p3/errors.hpp"

namespace p3 {

namespace {

std::vector<Polynomial> sturm_chain(const Polynomial& p)
{
    std::vector<Polynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        auto r = divmod(a, b).remainder;
        if (r.is_zero())
            break;
        chain.push_back(-r);
    }
    if (chain.back().is_zero())
        chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<int>& signs)
{
    int variations = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++variations;
        last = s;
    }
    return variations;
}

int variations_at(const std::vector<Polynomial>& chain, const Rational& t)
{
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain)
        signs.push_back(sign(q(t)));
    return sign_variations(signs);
}

int variations_at_infinity(const std::vector<Polynomial>& chain, bool positive)
{
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain)
        signs.push_back(sign_at_infinity(q, positive));
    return sign_variations(signs);
}

} // namespace

int sign(const Rational& r)
{
    return sgn(r);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

Polynomial Polynomial::constant(Rational c)
{
    return Polynomial(std::vector<Rational>{std::move(c)});
}

Polynomial Polynomial::x()
{
    return Polynomial(std::vector<Rational>{0, 1});
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const
{
    if (k < 0 || k > degree())
        return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const
{
    return is_zero() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& at) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const
{
    if (is_zero())
        return {};
    return *this * Rational(1 / leading());
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    return *this += -rhs;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial operator*(Polynomial a, const Rational& s)
{
    for (auto& c : a.coeffs_)
        c *= s;
    a.trim();
    return a;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

DivMod divmod(const Polynomial& num, const Polynomial& den)
{
    if (den.is_zero())
        throw DomainError("polynomial division by zero");
    std::vector<Rational> q(static_cast<std::size_t>(std::max(num.degree() - den.degree() + 1, 0)));
    Polynomial r = num;
    const Rational lead = den.leading();
    while (!r.is_zero() && r.degree() >= den.degree()) {
        const int shift = r.degree() - den.degree();
        const Rational factor = r.leading() / lead;
        q[static_cast<std::size_t>(shift)] = factor;
        std::vector<Rational> term(static_cast<std::size_t>(shift) + 1);
        term.back() = factor;
        r -= Polynomial(std::move(term)) * den;
    }
    return {Polynomial(std::move(q)), std::move(r)};
}

Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p)
{
    if (p.is_zero())
        throw DomainError("square-free decomposition of the zero polynomial");
    std::vector<Polynomial> factors;
    const Polynomial f = p.monic();
    if (f.degree() == 0)
        return factors;
    const Polynomial fp = f.derivative();
    const Polynomial a0 = gcd(f, fp);
    Polynomial b = divmod(f, a0).quotient;
    Polynomial c = divmod(fp, a0).quotient;
    Polynomial d = c - b.derivative();
    while (b.degree() > 0) {
        Polynomial a = gcd(b, d);
        factors.push_back(a);
        b = divmod(b, a).quotient;
        c = divmod(d, a).quotient;
        d = c - b.derivative();
    }
    return factors;
}

Polynomial odd_multiplicity_part(const Polynomial& p)
{
    Polynomial out = Polynomial::constant(1);
    const auto factors = squarefree_decomposition(p);
    for (std::size_t i = 0; i < factors.size(); i += 2)
        out = out * factors[i];
    return out.monic();
}

int sign_at_infinity(const Polynomial& p, bool positive)
{
    if (p.is_zero())
        return 0;
    const int s = sign(p.leading());
    return (positive || p.degree() % 2 == 0) ? s : -s;
}

std::int64_t count_roots_below(const Polynomial& squarefree, const Rational& t)
{
    if (squarefree.degree() <= 0)
        return 0;
    const auto chain = sturm_chain(squarefree);
    // Sturm counts roots in (-inf, t]; drop t itself if it is a root.
    std::int64_t n = variations_at_infinity(chain, false) - variations_at(chain, t);
    if (squarefree(t) == 0)
        --n;
    return n;
}

std::int64_t count_real_roots(const Polynomial& squarefree)
{
    if (squarefree.degree() <= 0)
        return 0;
    const auto chain = sturm_chain(squarefree);
    return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

std::string to_string(const Polynomial& p, const std::string& var)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p.coeff(k);
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (s.empty())
            s += (c < 0) ? "-" : "";
        else
            s += (c < 0) ? " - " : " + ";
        const bool unit = (mag == 1) && k > 0;
        if (!unit)
            s += mag.get_str();
        if (k >= 1)
            s += (unit ? "" : "*") + var;
        if (k >= 2)
            s += "^" + std::to_string(k);
    }
    return s;
}

} // namespace p3

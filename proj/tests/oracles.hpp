#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <array>
#include <optional>
#include <cstdint>
#include <random>
#include <vector>

#include "p3/chern.hpp"
#include "p3/chowring.hpp"
#include "p3/spectrum.hpp"

namespace p3::oracle {

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(0x5eed'cafe'f00dULL);
    return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi)
{
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

inline Rational random_rational(std::int64_t span = 50)
{
    return make_rational(uniform(-span, span), uniform(1, 12));
}

inline ChowClass random_chow()
{
    return {random_rational(), random_rational(), random_rational(), random_rational()};
}

inline ChernData random_chern(std::int64_t rank_max = 5, std::int64_t span = 12)
{
    return {uniform(1, rank_max), uniform(-span, span), uniform(-span, span), uniform(-span, span)};
}

/// Rank-3 data satisfying c3 = c1 c2 mod 2.
inline ChernData random_rank3(std::int64_t span = 12)
{
    ChernData d{3, uniform(-span, span), uniform(-span, span), uniform(-span, span)};
    if ((d.c3 - d.c1 * d.c2) % 2 != 0)
        ++d.c3;
    return d;
}

/// Untruncated product of two cubics in H, degree <= 6.
inline std::array<Rational, 7> naive_product(const ChowClass& a, const ChowClass& b)
{
    std::array<Rational, 7> out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            out[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    return out;
}

/// a(a-1)(a-2)/6, the Euler characteristic of O(a-3) on P^3.
inline Rational binom3_poly(std::int64_t a)
{
    Rational x = make_rational(a);
    return x * (x - 1) * (x - 2) / 6;
}

/// Split bundle O(a) + O(b) + O(c): Chern classes are the elementary
/// symmetric functions and chi is additive over summands.
struct SplitBundle {
    std::int64_t a, b, c;

    ChernData chern() const { return {3, a + b + c, a * b + b * c + c * a, a * b * c}; }

    Rational chi(std::int64_t m) const
    {
        return binom3_poly(m + a + 3) + binom3_poly(m + b + 3) + binom3_poly(m + c + 3);
    }
};

inline std::int64_t sign_of(const Rational& r)
{
    return r > 0 ? 1 : (r < 0 ? -1 : 0);
}

/// Interval holding one odd-multiplicity root; lo == hi when the root was
/// hit exactly by a sample.
struct RootBracket {
    Rational lo;
    Rational hi;

    bool below(std::int64_t t) const { return lo == hi ? lo < t : hi <= t; }
};

/// Sign scan of f at every multiple of 1/2 in [lo, hi]. Each sign change
/// yields one bracket of width 1/2, so no integer lies strictly inside a
/// bracket. Roots closer together than the sampling step can be missed;
/// callers that need all roots check the bracket count.
template <class Fn>
std::vector<RootBracket> odd_root_brackets(Fn f, std::int64_t lo, std::int64_t hi)
{
    std::vector<RootBracket> out;
    std::int64_t prev_sign = 0;
    Rational prev_x;
    std::optional<Rational> zero_at;
    for (std::int64_t k = 2 * lo; k <= 2 * hi; ++k) {
        const Rational x = make_rational(k, 2);
        const std::int64_t s = sign_of(f(x));
        if (s == 0) {
            zero_at = x;
            continue;
        }
        if (prev_sign != 0 && s != prev_sign)
            out.push_back(zero_at ? RootBracket{*zero_at, *zero_at} : RootBracket{prev_x, x});
        zero_at.reset();
        prev_sign = s;
        prev_x = x;
    }
    return out;
}

/// Every nondecreasing zero-sum tuple in the box [-bound, bound]^n, by
/// exhaustive enumeration of the box.
inline std::vector<std::vector<std::int64_t>> brute_spectra(std::int64_t n, std::int64_t bound)
{
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> t(static_cast<std::size_t>(n), -bound);
    while (true) {
        bool sorted = true;
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            sum += t[i];
            if (i && t[i - 1] > t[i])
                sorted = false;
        }
        if (sorted && sum == 0)
            out.push_back(t);
        std::size_t i = t.size();
        while (i > 0 && t[i - 1] == bound)
            t[--i] = -bound;
        if (i == 0)
            break;
        ++t[i - 1];
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace p3::oracle

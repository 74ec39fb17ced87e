#include "p3/spectrum.hpp"

#include <algorithm>
#include <numeric>

#include "p3/errors.hpp"
#include "p3/faults.hpp"

namespace p3 {

namespace {

std::int64_t spectrum_offset()
{
    return faultable<std::int64_t>(Fault::spectrum_shift, 1, 0);
}

void enumerate_from(std::int64_t remaining, std::int64_t lo, std::int64_t bound,
                    std::int64_t partial_sum, std::vector<std::int64_t>& prefix,
                    std::vector<Spectrum>& out)
{
    if (remaining == 0) {
        if (partial_sum == 0)
            out.emplace_back(prefix);
        return;
    }
    for (std::int64_t k = lo; k <= bound; ++k) {
        // Every later entry is >= k, so the total can only grow from here.
        if (partial_sum + remaining * k > 0)
            break;
        if (partial_sum + k + (remaining - 1) * bound < 0)
            continue;
        prefix.push_back(k);
        enumerate_from(remaining - 1, k, bound, partial_sum + k, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

Spectrum::Spectrum(std::vector<std::int64_t> ks) : ks_(std::move(ks))
{
    if (!std::is_sorted(ks_.begin(), ks_.end()))
        throw DomainError("spectrum must be nondecreasing: " + to_string(*this));
}

std::int64_t Spectrum::sum() const
{
    return std::accumulate(ks_.begin(), ks_.end(), std::int64_t{0});
}

std::string to_string(const Spectrum& sp)
{
    std::string s = "(";
    for (std::size_t i = 0; i < sp.values().size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(sp.values()[i]);
    }
    return s + ")";
}

std::int64_t h0_p1(std::int64_t a)
{
    return std::max<std::int64_t>(0, a + faultable<std::int64_t>(Fault::p1_section_shift, 1, 2));
}

std::int64_t h1_p1(std::int64_t a)
{
    return std::max<std::int64_t>(0, -a - 1);
}

std::int64_t h1_formula_max_twist(const SpectrumContext& ctx)
{
    return -ctx.a_high - 1;
}

std::int64_t h2_formula_min_twist(const SpectrumContext& ctx)
{
    return ctx.a_low - 3;
}

std::int64_t h1_from_spectrum(const Spectrum& sp, std::int64_t l, const SpectrumContext& ctx)
{
    if (l > h1_formula_max_twist(ctx))
        throw OutOfValidityRange("h1 spectrum formula needs l <= " +
                                 std::to_string(h1_formula_max_twist(ctx)) + ", got " +
                                 std::to_string(l));
    std::int64_t h = ctx.s;
    for (auto k : sp.values())
        h += h0_p1(k + l + spectrum_offset());
    return h;
}

std::int64_t h2_from_spectrum(const Spectrum& sp, std::int64_t l, const SpectrumContext& ctx)
{
    if (l < h2_formula_min_twist(ctx))
        throw OutOfValidityRange("h2 spectrum formula needs l >= " +
                                 std::to_string(h2_formula_min_twist(ctx)) + ", got " +
                                 std::to_string(l));
    std::int64_t h = 0;
    for (auto k : sp.values())
        h += h1_p1(k + l + spectrum_offset());
    return h;
}

bool is_instanton_spectrum(const Spectrum& sp)
{
    return std::all_of(sp.values().begin(), sp.values().end(),
                       [](std::int64_t k) { return k == 0; });
}

std::vector<Spectrum> enumerate_spectra(std::int64_t n, std::int64_t bound)
{
    if (n < 1)
        throw DomainError("spectrum length must be positive, got " + std::to_string(n));
    if (bound < 0)
        throw DomainError("enumeration bound must be nonnegative, got " + std::to_string(bound));
    std::vector<Spectrum> out;
    std::vector<std::int64_t> prefix;
    prefix.reserve(static_cast<std::size_t>(n));
    enumerate_from(n, -bound, bound, 0, prefix, out);
    return out;
}

} // namespace p3

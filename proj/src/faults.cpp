#include "p3/faults.hpp"

#include <array>

namespace p3 {

namespace {

thread_local Fault g_active = Fault::none;

constexpr std::array kCatalog{
    FaultInfo{Fault::todd_h1, "todd_h1", "Todd class H coefficient 2 -> 3"},
    FaultInfo{Fault::todd_h2, "todd_h2", "Todd class H^2 coefficient 11/6 -> 11/5"},
    FaultInfo{Fault::todd_h3, "todd_h3", "Todd class H^3 coefficient 1 -> 2"},
    FaultInfo{Fault::exp_cubic, "exp_cubic", "line-bundle exponential k^3/6 -> k^3/5"},
    FaultInfo{Fault::ch_quadratic_half, "ch_quadratic_half", "ch_2 = (c1^2 - 2c2)/2 -> /3"},
    FaultInfo{Fault::ch_cubic_sixth, "ch_cubic_sixth", "ch_3 denominator 6 -> 5"},
    FaultInfo{Fault::ch_cubic_c1c2, "ch_cubic_c1c2", "ch_3 term -3 c1 c2 -> -2 c1 c2"},
    FaultInfo{Fault::ch_cubic_c3, "ch_cubic_c3", "ch_3 term 3 c3 -> 2 c3"},
    FaultInfo{Fault::chi2_const, "chi2_const", "rank-3 chi closed form constant 3 -> 2"},
    FaultInfo{Fault::chi2_c1, "chi2_c1", "rank-3 chi closed form 11/6 c1 -> 11/5 c1"},
    FaultInfo{Fault::chi2_m, "chi2_m", "rank-3 chi closed form 11/2 m -> 9/2 m"},
    FaultInfo{Fault::chi2_m2, "chi2_m2", "rank-3 chi closed form 3 m^2 -> 2 m^2"},
    FaultInfo{Fault::chi2_mc1, "chi2_mc1", "rank-3 chi closed form 2 m c1 -> m c1"},
    FaultInfo{Fault::chi_end_c1sq, "chi_end_c1sq", "chi(End) closed form 4 c1^2 -> 5 c1^2"},
    FaultInfo{Fault::chi_end_c2, "chi_end_c2", "chi(End) closed form -12 c2 -> -11 c2"},
    FaultInfo{Fault::chi_end_const, "chi_end_const", "chi(End) closed form 9 -> 8"},
    FaultInfo{Fault::ext_c1sq, "ext_c1sq", "Ext difference -4 c1^2 -> -3 c1^2"},
    FaultInfo{Fault::ext_c2, "ext_c2", "Ext difference 12 c2 -> 11 c2"},
    FaultInfo{Fault::ext_const, "ext_const", "Ext difference -8 -> -7"},
    FaultInfo{Fault::curve_trivial_sections, "curve_trivial_sections",
              "curve-form chi: 2 trivial summands -> 1"},
    FaultInfo{Fault::dict_c2, "dict_c2", "dictionary c3 - 4c2 + c1c2 -> c3 - 3c2 + c1c2"},
    FaultInfo{Fault::dict_c1c2_sign, "dict_c1c2_sign", "dictionary + c1c2 -> - c1c2"},
    FaultInfo{Fault::dict_genus_shift, "dict_genus_shift", "dictionary 2g - 2 -> 2g - 4"},
    FaultInfo{Fault::normal_bundle_degree, "normal_bundle_degree",
              "normal bundle summand degree 2n+5 -> 2n+4"},
    FaultInfo{Fault::normal_canonical_twist, "normal_canonical_twist",
              "det N twisted by O(-3) -> O(-2)"},
    FaultInfo{Fault::thooft_offset, "thooft_offset", "'t Hooft threshold r-1 -> r-2"},
    FaultInfo{Fault::p1_section_shift, "p1_section_shift", "h0(O_P1(a)) = a+1 -> a+2"},
    FaultInfo{Fault::spectrum_shift, "spectrum_shift", "spectrum twist k+l+1 -> k+l"},
    FaultInfo{Fault::serre_shift, "serre_shift", "Serre duality reflection -t-4 -> -t-3"},
    FaultInfo{Fault::instanton_h1_twist, "instanton_h1_twist",
              "instanton vanishing H1(F(-2)) read at -1"},
    FaultInfo{Fault::chang_dimension, "chang_dimension", "reflexive moduli dimension 19 -> 18"},
    FaultInfo{Fault::ext1_dimension, "ext1_dimension", "extension space dimension 3 -> 4"},
};

} // namespace

std::span<const FaultInfo> fault_catalog()
{
    return kCatalog;
}

std::optional<Fault> fault_from_name(std::string_view name)
{
    for (const auto& info : kCatalog)
        if (info.name == name)
            return info.id;
    if (name == "none")
        return Fault::none;
    return std::nullopt;
}

Fault active_fault() noexcept
{
    return g_active;
}

ScopedFault::ScopedFault(Fault f) noexcept : previous_(g_active)
{
    g_active = f;
}

ScopedFault::~ScopedFault()
{
    g_active = previous_;
}

} // namespace p3

#pragma once

// Mutation hooks for the verification harness.
//
// Every numeric constant that encodes a formula (Todd coefficients, closed
// forms, the curve/bundle dictionary, quoted dimensions) is read through
// faultable(). Normally that returns the true value. While a ScopedFault is
// alive on the current thread, the matching site returns a corrupted value,
// which lets the harness check that verify-paper catches every single-constant
// mutation. The override is thread-local; other threads are unaffected.

#include <optional>
#include <span>
#include <string_view>

namespace p3 {

enum class Fault {
    none,
    todd_h1,
    todd_h2,
    todd_h3,
    exp_cubic,
    ch_quadratic_half,
    ch_cubic_sixth,
    ch_cubic_c1c2,
    ch_cubic_c3,
    chi2_const,
    chi2_c1,
    chi2_m,
    chi2_m2,
    chi2_mc1,
    chi_end_c1sq,
    chi_end_c2,
    chi_end_const,
    ext_c1sq,
    ext_c2,
    ext_const,
    curve_trivial_sections,
    dict_c2,
    dict_c1c2_sign,
    dict_genus_shift,
    normal_bundle_degree,
    normal_canonical_twist,
    thooft_offset,
    p1_section_shift,
    spectrum_shift,
    serre_shift,
    instanton_h1_twist,
    chang_dimension,
    ext1_dimension,
};

struct FaultInfo {
    Fault id;
    std::string_view name;
    std::string_view description;
};

/// Every injectable fault except Fault::none.
std::span<const FaultInfo> fault_catalog();

std::optional<Fault> fault_from_name(std::string_view name);

Fault active_fault() noexcept;

class ScopedFault {
public:
    explicit ScopedFault(Fault f) noexcept;
    ~ScopedFault();
    ScopedFault(const ScopedFault&) = delete;
    ScopedFault& operator=(const ScopedFault&) = delete;

private:
    Fault previous_;
};

template <class T>
T faultable(Fault site, T value, T mutated)
{
    return active_fault() == site ? mutated : value;
}

} // namespace p3

#pragma once

// Spectrum of a rank-3 bundle and the cohomology it predicts for
// sufficiently negative (h^1) and sufficiently positive (h^2) twists.

#include <cstdint>
#include <string>
#include <vector>

namespace p3 {

/// Nondecreasing integer list k_1 <= ... <= k_n, n = c2.
class Spectrum {
public:
    /// Throws DomainError if `ks` is not nondecreasing.
    explicit Spectrum(std::vector<std::int64_t> ks);

    const std::vector<std::int64_t>& values() const { return ks_; }
    std::size_t size() const { return ks_.size(); }
    std::int64_t sum() const;

    friend bool operator==(const Spectrum&, const Spectrum&) = default;
    friend auto operator<=>(const Spectrum&, const Spectrum&) = default;

private:
    std::vector<std::int64_t> ks_;
};

/// "(k1,k2,...)"
std::string to_string(const Spectrum& sp);

/// s = h^0 of the second Ext sheaf (0 for bundles); a_low/a_high are the
/// extremes of the generic splitting type.
struct SpectrumContext {
    std::int64_t s = 0;
    std::int64_t a_low = 0;
    std::int64_t a_high = 0;

    /// Semistable rank-3 bundle with c1 = 0: splitting type (0,0,0).
    static SpectrumContext locally_free() { return {}; }
};

std::int64_t h0_p1(std::int64_t a);
std::int64_t h1_p1(std::int64_t a);

/// Largest l at which the h^1 formula applies.
std::int64_t h1_formula_max_twist(const SpectrumContext& ctx);
/// Smallest l at which the h^2 formula applies.
std::int64_t h2_formula_min_twist(const SpectrumContext& ctx);

/// h^1(F(l)) = s + sum h^0(O_P1(k_i + l + 1)); valid for l <= -a_high - 1.
std::int64_t h1_from_spectrum(const Spectrum& sp, std::int64_t l,
                              const SpectrumContext& ctx = SpectrumContext::locally_free());

/// h^2(F(l)) = sum h^1(O_P1(k_i + l + 1)); valid for l >= a_low - 3.
std::int64_t h2_from_spectrum(const Spectrum& sp, std::int64_t l,
                              const SpectrumContext& ctx = SpectrumContext::locally_free());

/// A c1 = 0 bundle is an instanton iff its spectrum vanishes identically.
bool is_instanton_spectrum(const Spectrum& sp);

/// All nondecreasing zero-sum n-tuples with entries in [-bound, bound],
/// in lexicographic order.
std::vector<Spectrum> enumerate_spectra(std::int64_t n, std::int64_t bound);

} // namespace p3

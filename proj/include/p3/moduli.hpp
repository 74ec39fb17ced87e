#pragma once

// Dimension ledger for moduli of stable rank-3 bundles on P^3.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "p3/chern.hpp"

namespace p3 {

enum class Hypothesis {
    stable,        // hom(F,F) = 1 and Ext^3(F,F) = 0
    ext2_vanishes, // Ext^2(F,F) = 0, so F is a smooth point
};

std::string to_string(Hypothesis h);

struct DerivationStep {
    std::string quantity;
    std::int64_t value = 0;
    std::string provenance;

    friend bool operator==(const DerivationStep&, const DerivationStep&) = default;
};

struct ModuliReport {
    ChernData chern;
    std::int64_t chi_end = 0;
    std::int64_t ext_diff = 0;
    std::vector<Hypothesis> hypotheses;
    std::optional<std::int64_t> dimension;
    std::vector<DerivationStep> derivation;

    bool assumes(Hypothesis h) const;
};

/// Quoted inputs of the charge-2 dimension count that come from the
/// classification of rank-2 reflexive sheaves with Chern classes (-1,3,3).
std::int64_t reflexive_moduli_dimension();
std::int64_t extension_space_dimension();

/// dim Ext^1(F,F) - dim Ext^2(F,F) = -4c1^2 + 12c2 - 8 for stable rank 3.
std::int64_t ext_difference(const ChernData& d);

/// Dimension at a smooth point. Requires both hypotheses.
ModuliReport smooth_dimension(const ChernData& d, const std::vector<Hypothesis>& hypotheses);

/// 19 + 3 - 6 = 16 for the family of charge-2 instantons, cross-checked
/// against ext_difference. Throws InconsistentDerivation if they disagree.
ModuliReport charge2_dimension_chain();

} // namespace p3

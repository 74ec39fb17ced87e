#pragma once

// Cohomology tables of sheaves with natural cohomology, synthesized from the
// sign pattern of chi(F(t)), and Chern data of linear monads.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "p3/chern.hpp"

namespace p3 {

using CohomRow = std::array<std::int64_t, 4>;

struct CohomTable {
    ChernData chern;
    /// Twist t -> (h0, h1, h2, h3), ascending in t.
    std::map<std::int64_t, CohomRow> rows;

    const CohomRow& at(std::int64_t t) const;
    bool has(std::int64_t t) const { return rows.count(t) != 0; }

    friend bool operator==(const CohomTable&, const CohomTable&) = default;
};

/// Linear monad O(-1)^a -> O^b -> O(1)^c.
struct MonadType {
    std::int64_t a = 0;
    std::int64_t b = 1;
    std::int64_t c = 0;
};

/// Chern data of the monad's cohomology. Throws DomainError if b - a - c < 1.
ChernData monad_chern(const MonadType& mt);

/// Index i(t) of the only cohomology group allowed to be nonzero at twist t:
/// 3 minus the number of sign-changing roots of chi strictly below t.
/// Throws NotNaturalizable unless chi has three sign-changing real roots;
/// otherwise the index never reaches 0 and h^0 could not carry chi(t) for
/// large t. A cubic with a repeated root therefore never has a natural table.
class NaturalIndex {
public:
    explicit NaturalIndex(const ChernData& d);

    int operator()(std::int64_t t) const;
    const ChiPolynomial& chi() const { return chi_; }
    /// Square-free polynomial whose roots are the sign changes of chi.
    const Polynomial& sign_changes() const { return odd_part_; }

private:
    ChiPolynomial chi_;
    Polynomial odd_part_;
};

/// The unique table over [t_min, t_max] compatible with natural cohomology.
CohomTable natural_table(const ChernData& d, std::int64_t t_min, std::int64_t t_max);

/// H0(F(-1)) = H1(F(-2)) = H2(F(-2)) = H3(F(-3)) = 0. Throws MissingRows.
bool instanton_check(const CohomTable& tbl);

/// h^i(F(t)) == h^{3-i}(F*(-t-4)) for every row of the natural tables.
bool serre_symmetry_check(const ChernData& d, std::int64_t t_min, std::int64_t t_max);

} // namespace p3

#include "p3/cohomtable.hpp"

#include "p3/errors.hpp"
#include "p3/faults.hpp"

namespace p3 {

const CohomRow& CohomTable::at(std::int64_t t) const
{
    auto it = rows.find(t);
    if (it == rows.end())
        throw MissingRows("table has no row for twist " + std::to_string(t));
    return it->second;
}

ChernData monad_chern(const MonadType& mt)
{
    if (mt.a < 0 || mt.b < 0 || mt.c < 0)
        throw DomainError("monad multiplicities must be nonnegative");
    const std::int64_t rank = mt.b - mt.a - mt.c;
    if (rank < 1)
        throw DomainError("monad cohomology must have positive rank, got " + std::to_string(rank));
    const ChowClass ch = make_rational(mt.b) * ChowClass::one() -
                         make_rational(mt.a) * exp_line(-1) - make_rational(mt.c) * exp_line(1);
    return chern_from_character(ch, rank);
}

NaturalIndex::NaturalIndex(const ChernData& d)
    : chi_(chi_polynomial(d)), odd_part_(odd_multiplicity_part(chi_.polynomial()))
{
    const auto roots = count_real_roots(odd_part_);
    if (roots != 3)
        throw NotNaturalizable("chi(F(t)) for " + to_string(d) + " changes sign " +
                               std::to_string(roots) +
                               " time(s); a natural table needs three sign changes");
}

int NaturalIndex::operator()(std::int64_t t) const
{
    return 3 - static_cast<int>(count_roots_below(odd_part_, make_rational(t)));
}

CohomTable natural_table(const ChernData& d, std::int64_t t_min, std::int64_t t_max)
{
    if (t_min > t_max)
        throw DomainError("empty twist range [" + std::to_string(t_min) + ", " +
                          std::to_string(t_max) + "]");
    const NaturalIndex index(d);
    CohomTable tbl{d, {}};
    for (std::int64_t t = t_min; t <= t_max; ++t) {
        const std::int64_t chi = euler_characteristic(d, t);
        const int i = index(t);
        const std::int64_t h = (i % 2 == 0) ? chi : -chi;
        if (h < 0)
            throw NotNaturalizable("twist " + std::to_string(t) + ": h^" + std::to_string(i) +
                                       " would be " + std::to_string(h),
                                   t);
        CohomRow row{0, 0, 0, 0};
        row[static_cast<std::size_t>(i)] = h;
        tbl.rows.emplace(t, row);
    }
    return tbl;
}

bool instanton_check(const CohomTable& tbl)
{
    const std::int64_t h1_twist =
        faultable<std::int64_t>(Fault::instanton_h1_twist, -2, -1);
    for (std::int64_t t : {std::int64_t{-1}, std::int64_t{-2}, std::int64_t{-3}, h1_twist})
        if (!tbl.has(t))
            throw MissingRows("instanton check needs a row for twist " + std::to_string(t));
    return tbl.at(-1)[0] == 0 && tbl.at(h1_twist)[1] == 0 && tbl.at(-2)[2] == 0 &&
           tbl.at(-3)[3] == 0;
}

bool serre_symmetry_check(const ChernData& d, std::int64_t t_min, std::int64_t t_max)
{
    const std::int64_t shift = faultable<std::int64_t>(Fault::serre_shift, -4, -3);
    const CohomTable tbl = natural_table(d, t_min, t_max);
    const CohomTable dual_tbl = natural_table(dual(d), shift - t_max, shift - t_min);
    for (const auto& [t, row] : tbl.rows) {
        const CohomRow& mirrored = dual_tbl.at(shift - t);
        for (std::size_t i = 0; i < 4; ++i)
            if (row[i] != mirrored[3 - i])
                return false;
    }
    return true;
}

} // namespace p3

#include "p3/moduli.hpp"

#include <algorithm>

#include "p3/cohomtable.hpp"
#include "p3/errors.hpp"
#include "p3/faults.hpp"

namespace p3 {

std::string to_string(Hypothesis h)
{
    switch (h) {
    case Hypothesis::stable:
        return "stable";
    case Hypothesis::ext2_vanishes:
        return "ext2_vanishes";
    }
    return "unknown";
}

bool ModuliReport::assumes(Hypothesis h) const
{
    return std::find(hypotheses.begin(), hypotheses.end(), h) != hypotheses.end();
}

std::int64_t reflexive_moduli_dimension()
{
    return faultable<std::int64_t>(Fault::chang_dimension, 19, 18);
}

std::int64_t extension_space_dimension()
{
    return faultable<std::int64_t>(Fault::ext1_dimension, 3, 4);
}

std::int64_t ext_difference(const ChernData& d)
{
    require_rank3(d, "the Ext difference");
    const std::int64_t a = faultable<std::int64_t>(Fault::ext_c1sq, -4, -3);
    const std::int64_t b = faultable<std::int64_t>(Fault::ext_c2, 12, 11);
    const std::int64_t c = faultable<std::int64_t>(Fault::ext_const, -8, -7);
    return a * d.c1 * d.c1 + b * d.c2 + c;
}

ModuliReport smooth_dimension(const ChernData& d, const std::vector<Hypothesis>& hypotheses)
{
    require_rank3(d, "the smooth-point dimension");
    ModuliReport report;
    report.chern = d;
    report.hypotheses = hypotheses;
    for (Hypothesis h : {Hypothesis::stable, Hypothesis::ext2_vanishes})
        if (!report.assumes(h))
            throw MissingHypothesis("smooth_dimension requires the '" + to_string(h) +
                                    "' hypothesis");
    report.chi_end = chi_endomorphisms(d);
    report.ext_diff = ext_difference(d);
    report.derivation = {
        {"chi(F x F*)", report.chi_end, "Riemann-Roch in the Chow ring"},
        {"hom(F,F)", 1, "hypothesis: stable"},
        {"ext^3(F,F)", 0, "hypothesis: stable (Serre duality)"},
        {"ext^1 - ext^2", report.ext_diff, "closed form -4c1^2 + 12c2 - 8"},
        {"ext^2(F,F)", 0, "hypothesis: ext2_vanishes"},
        {"dim", report.ext_diff, "tangent space dimension at a smooth point"},
    };
    if (report.ext_diff != 1 - report.chi_end)
        throw InconsistentDerivation("Ext difference " + std::to_string(report.ext_diff) +
                                     " disagrees with 1 - chi(End) = " +
                                     std::to_string(1 - report.chi_end));
    report.dimension = report.ext_diff;
    return report;
}

ModuliReport charge2_dimension_chain()
{
    const ChernData f{3, 0, 2, 0};
    ModuliReport report;
    report.chern = f;
    report.hypotheses = {Hypothesis::stable, Hypothesis::ext2_vanishes};
    report.chi_end = chi_endomorphisms(f);
    report.ext_diff = ext_difference(f);

    const std::int64_t dim_r = reflexive_moduli_dimension();
    const std::int64_t dim_ext = extension_space_dimension();
    const std::int64_t dim_x = dim_r + dim_ext;

    // The fiber over F has dimension h^0(F(1)); with natural cohomology that
    // is chi(F(1)).
    const std::int64_t chi_f1 = euler_characteristic(f, 1);
    const CohomRow row = natural_table(f, 1, 1).at(1);
    if (row[1] != 0 || row[2] != 0 || row[3] != 0)
        throw InconsistentDerivation("natural table has higher cohomology at t = 1");
    const std::int64_t fiber = chi_f1 + row[1] - row[2] + row[3];
    const std::int64_t dim_i2 = dim_x - fiber;

    report.derivation = {
        {"dim R (Chang)", dim_r, "quoted: moduli of stable reflexive rank-2 sheaves (-1,3,3)"},
        {"dim Ext1(E(2),O)", dim_ext, "quoted: relative Ext sheaf rank"},
        {"dim X", dim_x, "computed: dim R + dim Ext1(E(2),O)"},
        {"fiber dim h0(F(1))", fiber,
         "computed: chi(F(1)) by Riemann-Roch, h1(F(1)) = 0 from the natural table"},
        {"dim I(2)", dim_i2, "computed: dim X - fiber dim"},
    };
    if (dim_i2 != report.ext_diff)
        throw InconsistentDerivation("dimension chain gives " + std::to_string(dim_i2) +
                                     " but the Ext difference is " +
                                     std::to_string(report.ext_diff));
    report.dimension = dim_i2;
    return report;
}

} // namespace p3

#include "p3/verify.hpp"

#include <functional>
#include <sstream>

#include "p3/chern.hpp"
#include "p3/chowring.hpp"
#include "p3/cohomtable.hpp"
#include "p3/curvelink.hpp"
#include "p3/moduli.hpp"
#include "p3/serialize.hpp"
#include "p3/spectrum.hpp"

namespace p3 {

namespace {

std::string show(std::int64_t v) { return std::to_string(v); }
std::string show(std::size_t v) { return std::to_string(v); }
std::string show(bool v) { return v ? "true" : "false"; }
std::string show(const std::string& v) { return "\"" + v + "\""; }
std::string show(const Rational& v) { return to_string(v); }
std::string show(const ChowClass& v) { return to_string(v); }
std::string show(const ChernData& v) { return to_string(v); }
std::string show(const Spectrum& v) { return to_string(v); }
std::string show(const CohomRow& r)
{
    return "(" + show(r[0]) + "," + show(r[1]) + "," + show(r[2]) + "," + show(r[3]) + ")";
}
std::string show(const CurveInvariants& cv) { return "(d=" + show(cv.d) + ",g=" + show(cv.g) + ")"; }
template <class T>
std::string show(const std::vector<T>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + show(v[i]);
    return s + "]";
}

class Checker {
public:
    template <class A, class E>
    void eq(const A& actual, const E& expected, const std::string& what)
    {
        ++checks_;
        if (!(actual == expected))
            failures_.push_back(what + ": got " + show(actual) + ", expected " + show(expected));
    }

    void that(bool cond, const std::string& what)
    {
        ++checks_;
        if (!cond)
            failures_.push_back(what);
    }

    bool ok() const { return failures_.empty(); }

    std::string detail() const
    {
        if (ok())
            return std::to_string(checks_) + " check(s) passed";
        std::string s;
        for (std::size_t i = 0; i < failures_.size() && i < 3; ++i)
            s += (i ? "; " : "") + failures_[i];
        if (failures_.size() > 3)
            s += "; ... " + std::to_string(failures_.size() - 3) + " more";
        return s;
    }

private:
    int checks_ = 0;
    std::vector<std::string> failures_;
};

struct Claim {
    const char* id;
    const char* anchor;
    std::function<void(Checker&)> run;
};

const ChernData kCharge2{3, 0, 2, 0};

CurveInvariants curve(std::int64_t d, std::int64_t g)
{
    return CurveInvariants::make(d, g, g == 0);
}

const std::vector<Claim>& claims()
{
    static const std::vector<Claim> list{
        // Chow ring
        {"ring.ch_product_charge2", "ch(F)ch(F*) = 9 + 2(c1^2 - 3c2)H^2",
         [](Checker& c) {
             c.eq(chern_character(kCharge2) * chern_character(dual(kCharge2)),
                  ChowClass(9, 0, -12, 0), "ch(F)ch(F*) for (0,2,0)");
             for (std::int64_t c1 = -3; c1 <= 3; ++c1)
                 for (std::int64_t c2 = -3; c2 <= 3; ++c2) {
                     const ChernData d{3, c1, c2, c1 * c2};
                     c.eq(chern_character(d) * chern_character(dual(d)),
                          ChowClass(9, 0, make_rational(2 * (c1 * c1 - 3 * c2)), 0),
                          "ch(F)ch(F*) for " + to_string(d));
                 }
         }},
        {"ring.chi_structure_sheaf", "chi(O_P3) = 1",
         [](Checker& c) { c.eq(degree(ChowClass::one() * todd_p3()), Rational(1), "deg(td)"); }},

        // Chern classes
        {"chern.character_charge2",
         "ch(F) = 3 + c1H + (c1^2 - 2c2)/2 H^2 + (c1^3 - 3c1c2 + 3c3)/6 H^3",
         [](Checker& c) {
             c.eq(chern_character(kCharge2), ChowClass(3, 0, -2, 0), "ch(3,0,2,0)");
         }},
        {"chern.self_dual_charge2", "F* has Chern classes (0,2,0)",
         [](Checker& c) { c.eq(dual(kCharge2), kCharge2, "dual(3,0,2,0)"); }},
        {"chern.reflexive_twist", "E(2) has Chern classes (3,5,3) for E of type (-1,3,3)",
         [](Checker& c) {
             c.eq(twist({2, -1, 3, 3}, 2), ChernData{2, 3, 5, 3}, "twist((2,-1,3,3), 2)");
         }},
        {"chern.instanton_twist", "F(1) has Chern classes (3, n+3, n+1)",
         [](Checker& c) {
             for (std::int64_t n = 2; n <= 10; ++n)
                 c.eq(twist({3, 0, n, 0}, 1), ChernData{3, 3, n + 3, n + 1},
                      "twist((3,0," + show(n) + ",0), 1)");
         }},
        {"chern.chi_f1_charge2", "chi(F(1)) = 6",
         [](Checker& c) { c.eq(euler_characteristic(kCharge2, 1), std::int64_t{6}, "chi(F(1))"); }},
        {"chern.chi_forms_agree",
         "2 binom(m+3,3) + binom(m+c1+3,3) - (m+c1)d - 1 + g = Riemann-Roch chi(F(m))",
         [](Checker& c) {
             for (std::int64_t c1 = -3; c1 <= 3; ++c1)
                 for (std::int64_t d = 1; d <= 6; ++d)
                     for (std::int64_t g = -3; g <= 3; ++g) {
                         const ChernData f = curve_to_bundle(curve(d, g), c1);
                         for (std::int64_t m = -10; m <= 10; ++m) {
                             const std::int64_t rr = euler_characteristic(f, m);
                             const std::string at = to_string(f) + " m=" + show(m);
                             c.eq(chi_curve_form(c1, d, g, m, BinomConvention::polynomial), rr,
                                  "curve form " + at);
                             if (m + 3 >= 0 && m + c1 + 3 >= 0)
                                 c.eq(chi_curve_form(c1, d, g, m, BinomConvention::truncated), rr,
                                      "truncated curve form " + at);
                             c.eq(chi_rank3_closed_form(f, m), Rational(rr), "closed form " + at);
                         }
                     }
         }},
        {"chern.parity_charge2", "c3 = c1c2 mod 2 holds for (0,2,0)",
         [](Checker& c) {
             c.eq(validate_parity(kCharge2), true, "parity (3,0,2,0)");
             c.eq(validate_parity({3, 0, 2, 1}), false, "parity (3,0,2,1)");
         }},
        {"chern.parity_f1", "c3 = c1c2 mod 2 holds for (3,5,3)",
         [](Checker& c) { c.eq(validate_parity({3, 3, 5, 3}), true, "parity (3,3,5,3)"); }},

        // Spectrum
        {"spectrum.h1_zero_at_minus2", "k_F = 0 gives h1(F(-2)) = 0",
         [](Checker& c) { c.eq(h1_from_spectrum(Spectrum({0, 0}), -2), std::int64_t{0}, "h1"); }},
        {"spectrum.h1_pair_at_minus2", "k_F = (-1,1) gives h1(F(-2)) = 1",
         [](Checker& c) { c.eq(h1_from_spectrum(Spectrum({-1, 1}), -2), std::int64_t{1}, "h1"); }},
        {"spectrum.h1_pair_at_minus1", "k_F = (-1,1) gives h1(F(-1)) = 2",
         [](Checker& c) { c.eq(h1_from_spectrum(Spectrum({-1, 1}), -1), std::int64_t{2}, "h1"); }},
        {"spectrum.h2_zero_at_minus2", "k_F = 0 gives h2(F(-2)) = 0",
         [](Checker& c) { c.eq(h2_from_spectrum(Spectrum({0, 0}), -2), std::int64_t{0}, "h2"); }},
        {"spectrum.h2_pair_at_minus2", "k_F = (-1,1) gives h2(F(-2)) = 1",
         [](Checker& c) { c.eq(h2_from_spectrum(Spectrum({-1, 1}), -2), std::int64_t{1}, "h2"); }},
        {"spectrum.h2_pair_at_1", "k_F = (-1,1) gives h2(F(1)) = 0",
         [](Checker& c) { c.eq(h2_from_spectrum(Spectrum({-1, 1}), 1), std::int64_t{0}, "h2"); }},
        {"spectrum.instanton_zero", "F is an instanton iff k_F = (0,...,0): (0,0)",
         [](Checker& c) { c.eq(is_instanton_spectrum(Spectrum({0, 0})), true, "(0,0)"); }},
        {"spectrum.instanton_pair", "F is an instanton iff k_F = (0,...,0): (-1,1)",
         [](Checker& c) { c.eq(is_instanton_spectrum(Spectrum({-1, 1})), false, "(-1,1)"); }},
        {"spectrum.instanton_charge3", "F is an instanton iff k_F = (0,...,0): (0,0,0)",
         [](Checker& c) { c.eq(is_instanton_spectrum(Spectrum({0, 0, 0})), true, "(0,0,0)"); }},
        {"spectrum.charge2_candidates", "k_F = (0,0) or k_F = (-1,1)",
         [](Checker& c) {
             c.eq(enumerate_spectra(2, 1), std::vector<Spectrum>{Spectrum({-1, 1}), Spectrum({0, 0})},
                  "enumerate_spectra(2, 1)");
         }},
        {"spectrum.pair_eliminated", "k_F = (-1,1) forces h1(F(-2)) = 1, but instantons have h1(F(-2)) = 0",
         [](Checker& c) {
             const auto row = natural_table(kCharge2, -2, -2).at(-2);
             c.eq(h1_from_spectrum(Spectrum({-1, 1}), -2) != row[1], true,
                  "(-1,1) prediction differs from the instanton row");
             c.eq(h1_from_spectrum(Spectrum({0, 0}), -2), row[1], "(0,0) prediction");
             c.eq(h2_from_spectrum(Spectrum({0, 0}), -2), row[2], "(0,0) prediction h2");
         }},

        // Curves
        {"curve.rational_quintic", "F(1) of type (3,5,3) corresponds to a rational quintic",
         [](Checker& c) { c.eq(bundle_to_curve({3, 3, 5, 3}), curve(5, 0), "bundle_to_curve"); }},
        {"curve.instanton_family", "d = n + 3 and g = 0 for F(1) of type (3, n+3, n+1)",
         [](Checker& c) {
             for (std::int64_t n = 2; n <= 10; ++n)
                 c.eq(bundle_to_curve({3, 3, n + 3, n + 1}), curve(n + 3, 0),
                      "n=" + show(n));
         }},
        {"curve.quintic_to_bundle", "c3 - 4c2 + c1c2 = 2g - 2 inverted at (d,g) = (5,0)",
         [](Checker& c) {
             c.eq(curve_to_bundle(curve(5, 0), 3), ChernData{3, 3, 5, 3}, "curve_to_bundle");
         }},
        {"curve.normal_degree_charge2", "det N (x) O_Y(-3) = O_Y((n+1)pt) at n = 2",
         [](Checker& c) { c.eq(rational_normal_twist_degree(2), std::int64_t{3}, "n=2"); }},
        {"curve.normal_degree_charge3", "det N (x) O_Y(-3) = O_Y((n+1)pt) at n = 3",
         [](Checker& c) { c.eq(rational_normal_twist_degree(3), std::int64_t{4}, "n=3"); }},
        {"curve.two_sections", "O_Y(3pt) is generated by two global sections",
         [](Checker& c) {
             c.eq(generated_by_two_sections(rational_normal_twist_degree(2)), true, "generated");
             c.eq(h0_p1(rational_normal_twist_degree(2)), std::int64_t{4}, "h0");
         }},
        {"curve.ideal_chi_rational", "chi(I_Y) = chi(O_P3) - chi(O_Y) = 0",
         [](Checker& c) {
             for (std::int64_t n = 2; n <= 10; ++n)
                 c.eq(chi_ideal_sheaf(curve(n + 3, 0), 0), std::int64_t{0}, "n=" + show(n));
         }},
        {"curve.thooft_rank3", "h0(F(1)) >= r - 1 = 2 for rank 3",
         [](Checker& c) { c.eq(thooft_threshold(3), std::int64_t{2}, "rank 3"); }},
        {"curve.thooft_rank2", "h0(F(1)) >= r - 1 = 1 for rank 2",
         [](Checker& c) { c.eq(thooft_threshold(2), std::int64_t{1}, "rank 2"); }},
        {"curve.thooft_charge2_cleared", "h0(F(1)) >= chi(F(1)) = 6 >= 2",
         [](Checker& c) {
             c.that(euler_characteristic(kCharge2, 1) >= thooft_threshold(3),
                    "chi(F(1)) clears the threshold");
         }},
        {"curve.chi_f1_closed_form", "chi(F(1)) = 12 - 3n at n = 2",
         [](Checker& c) { c.eq(chi_f1_charge(2), std::int64_t{6}, "n=2"); }},

        // Cohomology tables
        {"table.natural_rows_charge2", "natural cohomology of F over -5 <= t <= 1",
         [](Checker& c) {
             const auto tbl = natural_table(kCharge2, -5, 1);
             const std::vector<std::pair<std::int64_t, CohomRow>> expected{
                 {1, {6, 0, 0, 0}},  {0, {0, 1, 0, 0}},  {-1, {0, 2, 0, 0}}, {-2, {0, 0, 0, 0}},
                 {-3, {0, 0, 2, 0}}, {-4, {0, 0, 1, 0}}, {-5, {0, 0, 0, 6}}};
             for (const auto& [t, row] : expected)
                 c.eq(tbl.at(t), row, "row t=" + show(t));
         }},
        {"table.instanton_row", "H0(F(-1)) = H1(F(-2)) = H2(F(-2)) = H3(F(-3)) = 0",
         [](Checker& c) {
             c.eq(natural_table(kCharge2, -2, -2).at(-2), CohomRow{0, 0, 0, 0}, "row t=-2");
         }},
        {"table.instanton_check_charge2", "natural table of F satisfies the instanton vanishings",
         [](Checker& c) { c.eq(instanton_check(natural_table(kCharge2, -3, -1)), true, "check"); }},
        {"table.instanton_check_pair", "h1(F(-2)) = h2(F(-2)) = 1 is not an instanton",
         [](Checker& c) {
             auto tbl = natural_table(kCharge2, -3, -1);
             tbl.rows[-2] = {0, 1, 1, 0};
             c.eq(instanton_check(tbl), false, "check");
         }},
        {"table.serre_symmetry_charge2", "h3(F(-4)) = h0(F*), h2(F(-5)) = h1(F*(1))",
         [](Checker& c) { c.eq(serre_symmetry_check(kCharge2, -10, 6), true, "symmetry"); }},
        {"table.monad_charge2", "0 -> O(-1)^2 -> O^7 -> O(1)^2 -> 0 has type (3,0,2,0)",
         [](Checker& c) { c.eq(monad_chern({2, 7, 2}), kCharge2, "monad (2,7,2)"); }},

        // Moduli
        {"moduli.chi_end_identity", "chi(F (x) F*) = 4c1^2 - 12c2 + 9",
         [](Checker& c) {
             for (std::int64_t c1 = -4; c1 <= 4; ++c1)
                 for (std::int64_t c2 = -4; c2 <= 6; ++c2) {
                     const ChernData d{3, c1, c2, c1 * c2};
                     c.eq(chi_endomorphisms(d), chi_endomorphisms_closed_form(d), to_string(d));
                 }
         }},
        {"moduli.ext_difference_charge2", "dim Ext1(F,F) - dim Ext2(F,F) = -4c1^2 + 12c2 - 8 = 16",
         [](Checker& c) {
             c.eq(ext_difference(kCharge2), std::int64_t{16}, "ext difference");
             c.eq(ext_difference(kCharge2), 1 - chi_endomorphisms(kCharge2), "1 - chi(End)");
         }},
        {"moduli.ext_difference_family", "dim Ext1 - dim Ext2 = -4c1^2 + 12c2 - 8 = 1 - chi(F (x) F*); 12n - 8 at c1 = 0",
         [](Checker& c) {
             for (std::int64_t n = 2; n <= 10; ++n)
                 c.eq(ext_difference({3, 0, n, 0}), 12 * n - 8, "n=" + show(n));
             for (std::int64_t c1 = -4; c1 <= 4; ++c1)
                 for (std::int64_t c2 = -4; c2 <= 6; ++c2) {
                     const ChernData d{3, c1, c2, c1 * c2};
                     c.eq(ext_difference(d), 1 - chi_endomorphisms(d), to_string(d));
                 }
         }},
        {"moduli.smooth_dimension_charge2", "Ext2(F,F) = 0 and dim Ext1(F,F) = 16",
         [](Checker& c) {
             const auto r =
                 smooth_dimension(kCharge2, {Hypothesis::stable, Hypothesis::ext2_vanishes});
             c.eq(r.dimension.value_or(-1), std::int64_t{16}, "dimension");
         }},
        {"moduli.chain_total", "the family of charge-2 instantons is irreducible of dimension 16",
         [](Checker& c) {
             const auto r = charge2_dimension_chain();
             c.eq(r.dimension.value_or(-1), std::int64_t{16}, "chain");
             c.eq(r.dimension.value_or(-1), ext_difference(kCharge2), "chain vs Ext difference");
         }},
        {"moduli.chain_fiber", "dim of the fiber = h0(F(1)) = 6",
         [](Checker& c) {
             c.eq(charge2_dimension_chain().derivation.at(3).value, std::int64_t{6}, "fiber");
         }},
        {"moduli.chain_total_space", "the pairs (E, xi) form a variety of dimension 22",
         [](Checker& c) {
             const auto r = charge2_dimension_chain();
             c.eq(r.derivation.at(0).value, std::int64_t{19}, "dim R");
             c.eq(r.derivation.at(1).value, std::int64_t{3}, "dim Ext1");
             c.eq(r.derivation.at(2).value, std::int64_t{22}, "dim X");
         }},

        // Command-line renderings
        {"cli.chi_output", "chi 3 0 2 0 --m 1 prints 6",
         [](Checker& c) { c.eq(std::to_string(euler_characteristic(kCharge2, 1)), std::string("6"), "output"); }},
        {"cli.table_output", "table 3 0 2 0 -5 1 prints seven natural rows",
         [](Checker& c) {
             const auto tbl = table_from_json(to_json(natural_table(kCharge2, -5, 1)));
             c.eq(tbl.rows.size(), std::size_t{7}, "row count");
             c.eq(tbl.at(1), CohomRow{6, 0, 0, 0}, "t=1");
             c.eq(tbl.at(-5), CohomRow{0, 0, 0, 6}, "t=-5");
         }},
        {"cli.spectra_output", "spectra 2 lists (-1,1) as non-instanton and (0,0) as instanton",
         [](Checker& c) {
             std::vector<std::string> lines;
             for (const auto& sp : enumerate_spectra(2, 1))
                 lines.push_back(format_spectrum_line(sp));
             c.eq(lines,
                  std::vector<std::string>{"(-1,1): h1(-2)=1 h2(-2)=1 instanton=no",
                                           "(0,0): h1(-2)=0 h2(-2)=0 instanton=yes"},
                  "lines");
         }},
    };
    return list;
}

} // namespace

bool VerificationReport::all_passed() const
{
    for (const auto& c : claims)
        if (!c.passed)
            return false;
    return true;
}

std::vector<const ClaimResult*> VerificationReport::failures() const
{
    std::vector<const ClaimResult*> out;
    for (const auto& c : claims)
        if (!c.passed)
            out.push_back(&c);
    return out;
}

std::vector<std::string> claim_ids()
{
    std::vector<std::string> ids;
    for (const auto& c : claims())
        ids.emplace_back(c.id);
    return ids;
}

VerificationReport run_verification()
{
    VerificationReport report;
    for (const auto& claim : claims()) {
        ClaimResult result{claim.id, claim.anchor, false, {}};
        try {
            Checker checker;
            claim.run(checker);
            result.passed = checker.ok();
            result.detail = checker.detail();
        } catch (const std::exception& e) {
            result.detail = std::string("exception: ") + e.what();
        }
        report.claims.push_back(std::move(result));
    }
    return report;
}

nlohmann::json to_json(const VerificationReport& report)
{
    nlohmann::json claims = nlohmann::json::array();
    for (const auto& c : report.claims)
        claims.push_back(
            {{"id", c.id}, {"anchor", c.anchor}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"claims", std::move(claims)},
            {"passed", report.all_passed()},
            {"failed", report.failures().size()},
            {"total", report.claims.size()}};
}

std::string format_report_text(const VerificationReport& report)
{
    std::ostringstream out;
    for (const auto& c : report.claims)
        out << (c.passed ? "PASS " : "FAIL ") << c.id << "  [" << c.anchor << "]"
            << (c.passed ? "" : "  -- " + c.detail) << '\n';
    const auto failures = report.failures();
    out << (report.claims.size() - failures.size()) << "/" << report.claims.size()
        << " claims verified\n";
    if (!failures.empty()) {
        out << "failed:";
        for (const auto* f : failures)
            out << ' ' << f->id;
        out << '\n';
    }
    return out.str();
}

} // namespace p3

// Standalone acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any criterion fails.

#include <sys/wait.h>

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "p3/chern.hpp"
#include "p3/cohomtable.hpp"
#include "p3/curvelink.hpp"
#include "p3/errors.hpp"
#include "p3/faults.hpp"
#include "p3/moduli.hpp"
#include "p3/spectrum.hpp"

using namespace p3;

namespace {

constexpr int kCases = 1000;
const ChernData kCharge2{3, 0, 2, 0};

// Collects the first few mismatches for the report line.
class Check {
public:
    template <class A, class B>
    void eq(const A& got, const B& want, const std::string& what)
    {
        ++count_;
        if (got == want)
            return;
        if (failures_.size() < 3) {
            std::ostringstream os;
            os << what << ": got " << got << ", want " << want;
            failures_.push_back(os.str());
        }
        ++failed_;
    }
    void truth(bool ok, const std::string& what) { eq(ok, true, what); }

    bool ok() const { return failed_ == 0 && count_ > 0; }
    std::string summary() const
    {
        if (count_ == 0)
            return "no checks ran";
        if (failed_ == 0)
            return std::to_string(count_) + " checks";
        std::string s = std::to_string(failed_) + "/" + std::to_string(count_) + " failed";
        for (const auto& f : failures_)
            s += "; " + f;
        return s;
    }

private:
    int count_ = 0;
    int failed_ = 0;
    std::vector<std::string> failures_;
};

std::ostream& operator<<(std::ostream& os, const CohomRow& r)
{
    return os << '(' << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ')';
}

int run_cli(const std::string& args)
{
    const std::string cmd = std::string(P3CALC_BIN) + " " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

void dimension16(Check& c)
{
    c.eq(ext_difference(kCharge2), 16, "ext_difference(3,0,2,0)");
    const auto chain = charge2_dimension_chain();
    c.truth(chain.dimension.has_value(), "chain has a dimension");
    if (chain.dimension)
        c.eq(*chain.dimension, 16, "chain dimension");
    c.eq(chain.derivation.size(), std::size_t{5}, "chain steps");
    if (chain.derivation.size() == 5) {
        c.eq(chain.derivation[0].value, 19, "dim R");
        c.eq(chain.derivation[1].value, 3, "dim Ext1");
        c.eq(chain.derivation[3].value, 6, "fiber dimension");
        c.eq(chain.derivation[0].value + chain.derivation[1].value - chain.derivation[3].value, 16,
             "19 + 3 - 6");
    }
}

void chi_f1(Check& c)
{
    c.eq(euler_characteristic(kCharge2, 1), 6, "chi(F(1))");
    c.eq(natural_table(kCharge2, 1, 1).at(1), CohomRow{6, 0, 0, 0}, "row t=1");
}

void spectrum_suite(Check& c)
{
    const Spectrum pair({-1, 1}), zero({0, 0});
    const auto unit = enumerate_spectra(2, 1);
    c.eq(unit.size(), std::size_t{2}, "spectra count, bound 1");
    if (unit.size() == 2) {
        c.truth(unit[0] == pair, "first spectrum is (-1,1)");
        c.truth(unit[1] == zero, "second spectrum is (0,0)");
    }
    // Wider boxes add gapped tuples like (-2,2); the entries within [-1,1]
    // stay the same two.
    for (std::int64_t bound = 2; bound <= 4; ++bound) {
        std::vector<Spectrum> inner;
        for (const auto& sp : enumerate_spectra(2, bound))
            if (sp.values().front() >= -1 && sp.values().back() <= 1)
                inner.push_back(sp);
        c.truth(inner == unit, "entries within [-1,1], bound " + std::to_string(bound));
    }
    c.eq(h1_from_spectrum(pair, -2), 1, "h1(-2) for (-1,1)");
    c.eq(h2_from_spectrum(pair, -2), 1, "h2(-2) for (-1,1)");
    c.eq(h1_from_spectrum(zero, -2), 0, "h1(-2) for (0,0)");
    c.eq(h2_from_spectrum(zero, -2), 0, "h2(-2) for (0,0)");
    c.eq(h1_from_spectrum(pair, -1), 2, "h1(-1) for (-1,1)");
}

void seven_rows(Check& c)
{
    const std::vector<std::pair<std::int64_t, CohomRow>> expected{
        {-5, {0, 0, 0, 6}}, {-4, {0, 0, 1, 0}}, {-3, {0, 0, 2, 0}}, {-2, {0, 0, 0, 0}},
        {-1, {0, 2, 0, 0}}, {0, {0, 1, 0, 0}},  {1, {6, 0, 0, 0}},
    };
    const auto tbl = natural_table(kCharge2, -5, 1);
    c.eq(tbl.rows.size(), expected.size(), "row count");
    for (const auto& [t, row] : expected)
        c.eq(tbl.at(t), row, "row t=" + std::to_string(t));
    c.truth(instanton_check(tbl), "instanton_check");
}

void identities(Check& c)
{
    for (int i = 0; i < kCases; ++i) {
        auto d = oracle::random_rank3(20);
        // The curve dictionary needs a curve of positive degree.
        if (d.c2 < 1)
            d.c2 = 2 - d.c2;
        const auto cv = bundle_to_curve(d);
        for (std::int64_t m = -6; m <= 6; ++m) {
            const std::int64_t rr = euler_characteristic(d, m);
            c.eq(chi_rank3_closed_form(d, m), Rational(rr), "closed form " + to_string(d));
            c.eq(chi_curve_form(d.c1, cv.d, cv.g, m, BinomConvention::polynomial), rr,
                 "curve form " + to_string(d));
        }
    }
    for (int i = 0; i < kCases; ++i) {
        const auto d = oracle::random_rank3(20);
        c.eq(chi_endomorphisms(d), chi_endomorphisms_closed_form(d), "chi_end " + to_string(d));
        c.eq(ext_difference(d), 1 - chi_endomorphisms(d), "ext_difference " + to_string(d));
    }
    for (int i = 0; i < kCases; ++i) {
        const auto d = oracle::random_chern();
        const std::int64_t a = oracle::uniform(-10, 10);
        const std::int64_t b = oracle::uniform(-10, 10);
        c.truth(twist(twist(d, a), b) == twist(d, a + b), "twist law " + to_string(d));
        c.truth(twist(d, 0) == d, "twist by 0 " + to_string(d));
        c.truth(chern_from_character(chern_character(d), d.rank) == d, "roundtrip " + to_string(d));
    }
    for (int i = 0; i < kCases; ++i) {
        const auto cv = CurveInvariants::make(oracle::uniform(1, 30), oracle::uniform(-30, 30));
        const std::int64_t c1 = oracle::uniform(-10, 10);
        const auto back = bundle_to_curve(curve_to_bundle(cv, c1));
        c.truth(back.d == cv.d && back.g == cv.g, "curve roundtrip");
    }
    for (int i = 0; i < kCases; ++i) {
        const auto d = oracle::random_rank3(20);
        const std::int64_t m = oracle::uniform(-15, 15);
        c.eq(euler_characteristic(d, m), -euler_characteristic(dual(d), -m - 4),
             "Serre " + to_string(d));
    }
    c.truth(serre_symmetry_check(kCharge2, -10, 6), "serre_symmetry_check (3,0,2,0) [-10,6]");
}

void bookkeeping(Check& c)
{
    c.truth(monad_chern({2, 7, 2}) == kCharge2, "monad_chern(2,7,2)");
    c.truth(twist({2, -1, 3, 3}, 2) == ChernData{2, 3, 5, 3}, "twist((2,-1,3,3), 2)");
    const auto quintic = bundle_to_curve({3, 3, 5, 3});
    c.eq(quintic.d, 5, "quintic degree");
    c.eq(quintic.g, 0, "quintic genus");
    for (std::int64_t n = 2; n <= 20; ++n) {
        const auto deg = rational_normal_twist_degree(n);
        c.eq(deg, n + 1, "normal twist degree n=" + std::to_string(n));
        c.truth(generated_by_two_sections(deg), "two sections n=" + std::to_string(n));
    }
}

void fault_harness(Check& c)
{
    c.eq(run_cli("verify-paper"), 0, "verify-paper on a correct build");
    int detected = 0;
    for (const auto& f : fault_catalog()) {
        const int rc = run_cli("verify-paper --inject-fault " + std::string(f.name));
        c.eq(rc, 1, "fault " + std::string(f.name));
        detected += rc == 1;
    }
    c.eq(detected, static_cast<int>(fault_catalog().size()), "faults detected");
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
        {"1 dimension 16 from ext_difference and the charge-2 chain", dimension16},
        {"2 chi(F(1)) = 6 and natural row (6,0,0,0) at t=1", chi_f1},
        {"3 charge-2 spectra and their h1/h2 values", spectrum_suite},
        {"4 seven natural rows for (3,0,2,0) over [-5,1]", seven_rows},
        {"5 identity suite", identities},
        {"6 monad, twist and curve correspondence bookkeeping", bookkeeping},
        {"7 verify-paper passes and detects every injected fault", fault_harness},
    };
    int failed = 0;
    for (const auto& [name, body] : criteria) {
        Check c;
        try {
            body(c);
        } catch (const std::exception& e) {
            c.truth(false, std::string("exception: ") + e.what());
        }
        std::cout << (c.ok() ? "PASS " : "FAIL ") << name << "  (" << c.summary() << ")\n";
        failed += !c.ok();
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " acceptance criteria met\n";
    return failed == 0 ? 0 : 1;
}

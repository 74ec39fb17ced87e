// p3calc: Chern-class, cohomology and moduli-dimension queries for sheaves
// on P^3, plus `verify-paper`, which replays the published numeric claims.
//
// Exit codes: 0 success, 1 verification failure, 2 bad arguments or domain
// error, 3 no natural-cohomology table exists.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "p3/chern.hpp"
#include "p3/cohomtable.hpp"
#include "p3/curvelink.hpp"
#include "p3/errors.hpp"
#include "p3/faults.hpp"
#include "p3/moduli.hpp"
#include "p3/serialize.hpp"
#include "p3/spectrum.hpp"
#include "p3/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotNatural = 3;

constexpr std::int64_t kRangeLimit = 100;

enum class Format { text, json };

struct CliConfig {
    Format format = Format::text;
    std::int64_t t_min = -5;
    std::int64_t t_max = 1;
    std::int64_t spectrum_bound = 1;
};

void validate(const CliConfig& cfg)
{
    auto in_range = [](std::int64_t v) { return v >= -kRangeLimit && v <= kRangeLimit; };
    if (!in_range(cfg.t_min) || !in_range(cfg.t_max))
        throw p3::DomainError("twist bounds must lie in [-100, 100]");
    if (cfg.t_min > cfg.t_max)
        throw p3::DomainError("t_min must not exceed t_max");
    if (cfg.spectrum_bound < 0 || cfg.spectrum_bound > kRangeLimit)
        throw p3::DomainError("spectrum bound must lie in [0, 100]");
}

struct ChernArgs {
    std::int64_t rank = 0, c1 = 0, c2 = 0, c3 = 0;
    p3::ChernData data() const { return {rank, c1, c2, c3}; }
};

void add_chern_positionals(CLI::App* cmd, ChernArgs& args)
{
    cmd->add_option("rank", args.rank, "rank")->required();
    cmd->add_option("c1", args.c1, "first Chern class")->required();
    cmd->add_option("c2", args.c2, "second Chern class")->required();
    cmd->add_option("c3", args.c3, "third Chern class")->required();
}

void add_format(CLI::App* cmd, Format& format)
{
    const std::map<std::string, Format> names{{"text", Format::text}, {"json", Format::json}};
    cmd->add_option("--format", format, "output format")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

void print_json(const nlohmann::json& j)
{
    std::cout << j.dump(2) << '\n';
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"p3calc - exact characteristic-class calculus for rank-3 bundles on P^3"};
    app.require_subcommand(1);

    CliConfig cfg;
    ChernArgs chern;

    std::int64_t m = 0;
    auto* chi = app.add_subcommand("chi", "Euler characteristic chi(F(m))");
    add_chern_positionals(chi, chern);
    chi->add_option("--m", m, "twist")->required();
    add_format(chi, cfg.format);

    auto* chipoly = app.add_subcommand("chipoly", "chi(F(m)) as a cubic polynomial in m");
    add_chern_positionals(chipoly, chern);
    add_format(chipoly, cfg.format);

    auto* table = app.add_subcommand("table", "natural-cohomology table over [t_min, t_max]");
    add_chern_positionals(table, chern);
    table->add_option("t_min", cfg.t_min, "first twist")->required();
    table->add_option("t_max", cfg.t_max, "last twist")->required();
    add_format(table, cfg.format);

    std::int64_t spectrum_length = 0;
    auto* spectra = app.add_subcommand("spectra", "zero-sum spectra of a given length");
    spectra->add_option("n", spectrum_length, "spectrum length (c2)")->required();
    spectra->add_option("--bound", cfg.spectrum_bound, "max |k_i|");
    add_format(spectra, cfg.format);

    std::int64_t k = 0;
    auto* twist = app.add_subcommand("twist", "Chern classes of F(k)");
    add_chern_positionals(twist, chern);
    twist->add_option("k", k, "twist")->required();
    add_format(twist, cfg.format);

    auto* curve = app.add_subcommand("curve", "degree and genus of the associated curve");
    add_chern_positionals(curve, chern);
    add_format(curve, cfg.format);

    p3::MonadType monad;
    auto* monad_cmd = app.add_subcommand("monad", "Chern classes of O(-1)^a -> O^b -> O(1)^c");
    monad_cmd->add_option("a", monad.a)->required();
    monad_cmd->add_option("b", monad.b)->required();
    monad_cmd->add_option("c", monad.c)->required();
    add_format(monad_cmd, cfg.format);

    std::vector<std::string> assumed;
    auto* dimension = app.add_subcommand("dimension", "moduli dimension at a smooth point");
    add_chern_positionals(dimension, chern);
    dimension->add_option("--assume", assumed, "hypotheses: stable, ext2_vanishes")
        ->delimiter(',')
        ->check(CLI::IsMember({"stable", "ext2_vanishes"}));
    add_format(dimension, cfg.format);

    auto* chain = app.add_subcommand("chain", "dimension count for charge-2 instantons");
    add_format(chain, cfg.format);

    std::string fault_name;
    auto* verify = app.add_subcommand("verify-paper", "replay every published numeric claim");
    add_format(verify, cfg.format);
    verify->add_option("--inject-fault", fault_name, "corrupt one constant (harness use)")
        ->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        validate(cfg);
        const bool json = cfg.format == Format::json;

        if (*chi) {
            const auto d = chern.data();
            const auto value = p3::euler_characteristic(d, m);
            if (json)
                print_json({{"chern", p3::to_json(d)}, {"m", m}, {"chi", value}});
            else
                std::cout << value << '\n';
        } else if (*chipoly) {
            const auto d = chern.data();
            const auto p = p3::chi_polynomial(d);
            if (json) {
                nlohmann::json coeffs = nlohmann::json::array();
                for (int i = 0; i <= 3; ++i)
                    coeffs.push_back(p3::to_string(p.coeff(i)));
                print_json({{"chern", p3::to_json(d)}, {"coefficients", coeffs}});
            } else {
                std::cout << p3::to_string(p.polynomial()) << '\n';
            }
        } else if (*table) {
            const auto d = chern.data();
            if (d.rank == 3 && !p3::validate_parity(d))
                throw p3::ParityViolation("parity violation: c3 - c1 c2 is odd for " +
                                          p3::to_string(d));
            const auto tbl = p3::natural_table(d, cfg.t_min, cfg.t_max);
            if (json)
                print_json(p3::to_json(tbl));
            else
                std::cout << p3::format_table_text(tbl);
        } else if (*spectra) {
            if (spectrum_length < 1 || spectrum_length > kRangeLimit)
                throw p3::DomainError("spectrum length must lie in [1, 100]");
            const auto list = p3::enumerate_spectra(spectrum_length, cfg.spectrum_bound);
            if (json) {
                nlohmann::json out = nlohmann::json::array();
                for (const auto& sp : list)
                    out.push_back({{"spectrum", sp.values()},
                                   {"h1_minus2", p3::h1_from_spectrum(sp, -2)},
                                   {"h2_minus2", p3::h2_from_spectrum(sp, -2)},
                                   {"instanton", p3::is_instanton_spectrum(sp)}});
                print_json(out);
            } else {
                for (const auto& sp : list)
                    std::cout << p3::format_spectrum_line(sp) << '\n';
            }
        } else if (*twist) {
            const auto t = p3::twist(chern.data(), k);
            if (json)
                print_json({{"chern", p3::to_json(t)}});
            else
                std::cout << p3::to_string(t) << '\n';
        } else if (*curve) {
            const auto cv = p3::bundle_to_curve(chern.data());
            if (json)
                print_json({{"d", cv.d}, {"g", cv.g}});
            else
                std::cout << "d=" << cv.d << " g=" << cv.g << '\n';
        } else if (*monad_cmd) {
            const auto d = p3::monad_chern(monad);
            if (json)
                print_json({{"chern", p3::to_json(d)}});
            else
                std::cout << p3::to_string(d) << '\n';
        } else if (*dimension) {
            std::vector<p3::Hypothesis> hyps;
            for (const auto& a : assumed)
                hyps.push_back(a == "stable" ? p3::Hypothesis::stable
                                             : p3::Hypothesis::ext2_vanishes);
            const auto report = p3::smooth_dimension(chern.data(), hyps);
            if (json)
                print_json(p3::to_json(report));
            else
                std::cout << p3::format_report_text(report);
        } else if (*chain) {
            const auto report = p3::charge2_dimension_chain();
            if (json)
                print_json(p3::to_json(report));
            else
                std::cout << p3::format_report_text(report);
        } else if (*verify) {
            p3::Fault fault = p3::Fault::none;
            if (!fault_name.empty()) {
                auto f = p3::fault_from_name(fault_name);
                if (!f)
                    throw p3::DomainError("unknown fault '" + fault_name + "'");
                fault = *f;
            }
            const p3::ScopedFault scoped(fault);
            const auto report = p3::run_verification();
            if (json)
                print_json(p3::to_json(report));
            else
                std::cout << p3::format_report_text(report);
            return report.all_passed() ? kExitOk : kExitVerifyFailed;
        }
    } catch (const p3::NotNaturalizable& e) {
        std::cerr << "error: " << e.what();
        if (e.twist())
            std::cerr << " (twist " << *e.twist() << ")";
        std::cerr << '\n';
        return kExitNotNatural;
    } catch (const p3::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

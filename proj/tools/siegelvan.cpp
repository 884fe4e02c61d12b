// Command-line front end: divisor/cone queries, propagation runs with a
// persistent ledger, figure-data export, and g=2 SVG scatter plots.
// Exit codes: 0 success, 1 usage or data error, 2 ledger/run mismatch.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "siegel/hasse.hpp"
#include "siegel/rootsys.hpp"
#include "siegel/svgplot.hpp"
#include "siegel/vanishing.hpp"
#include "siegel/weyl.hpp"

using namespace siegel;

namespace {

struct Opts {
    int g = 2;
    i64 p = 7;
    std::string I0;
    int e = 0;
    i64 kmin = -50, kmax = 0;
    std::string mode = "hasse";
    std::string ledger_path;
    std::string out_path;
    std::string word;
    std::vector<i64> lambda;
    bool reverse_columns = false;
    bool cumulative = false;
    bool seed_g2_special = false;
};

AmpMode amp_mode(const Opts& o) {
    return o.mode == "orbital" ? AmpMode::OrbitalSufficient : AmpMode::HasseCone;
}

ParabolicType parse_I0(int g, const std::string& text) {
    unsigned mask = 0;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        std::string digits = tok;
        if (digits.size() >= 2 && digits[0] == 's') digits = digits.substr(1);
        int v = 0;
        for (char c : digits) {
            if (c < '0' || c > '9') { v = -1; break; }
            v = v * 10 + (c - '0');
        }
        if (v < 1 || v > g - 1)
            throw std::invalid_argument("bad Levi generator \"" + tok + "\" (expect s1..s" +
                                        std::to_string(g - 1) + ")");
        mask |= 1u << static_cast<unsigned>(v - 1);
    }
    return parabolic_from_mask(g, mask);
}

Character parse_lambda(const Opts& o) {
    if (static_cast<int>(o.lambda.size()) != o.g)
        throw std::invalid_argument("--lambda needs exactly " + std::to_string(o.g) +
                                    " comma-separated integers");
    return Character(o.lambda);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

VanishingLedger open_ledger(const Opts& o, bool must_exist) {
    if (o.ledger_path.empty()) throw std::invalid_argument("--ledger is required");
    SystemContext ctx = make_context(o.g, o.p);
    WeightBox box = make_box(o.kmin, o.kmax);
    if (std::filesystem::exists(o.ledger_path)) {
        VanishingLedger led = VanishingLedger::load(o.ledger_path);
        require_compatible(led, ctx, box, amp_mode(o));
        return led;
    }
    if (must_exist) throw std::runtime_error("no ledger file at " + o.ledger_path);
    return make_ledger(ctx, box, amp_mode(o));
}

std::vector<size_t> sizes(const VanishingLedger& led) {
    std::vector<size_t> out;
    for (const auto& s : led.V) out.push_back(s.size());
    return out;
}

int run_propagation(const Opts& o, const std::string& which) {
    VanishingLedger led = open_ledger(o, false);
    std::vector<size_t> before = sizes(led);
    bool changed = false;
    if (o.seed_g2_special) {
        changed = seed_special(led, SeedFamily::E1Parallel) || changed;
        changed = seed_special(led, SeedFamily::E2Parallel) || changed;
    }
    std::optional<int> sweeps;
    if (which == "compute") {
        changed = compute(led, parse_I0(o.g, o.I0), o.e, amp_mode(o)) || changed;
    } else if (which == "compute-all") {
        changed = compute_all(led, amp_mode(o)) || changed;
    } else {
        int n = fixpoint(led, amp_mode(o));
        sweeps = n;
        changed = changed || n > 1;
    }
    led.save(o.ledger_path);
    std::cout << "changed: " << (changed ? "true" : "false") << "\n";
    if (sweeps) std::cout << "sweeps: " << *sweeps << "\n";
    for (int e = 0; e < led.ctx.d; ++e) {
        size_t now = led.V[static_cast<size_t>(e)].size();
        std::cout << "degree " << e << ": +" << now - before[static_cast<size_t>(e)]
                  << " (total " << now << ")\n";
    }
    return 0;
}

int run_ample(const Opts& o) {
    SystemContext ctx = make_context(o.g, o.p);
    ParabolicType P0 = parse_I0(o.g, o.I0);
    Character lam = parse_lambda(o);
    if (!is_in_XstarP0(lam, P0)) {
        std::cout << "false (weight is not constant on the I0 blocks)\n";
        return 0;
    }
    if (amp_mode(o) == AmpMode::HasseCone) {
        HasseCone cone(ctx, P0);
        if (auto fail = cone.first_failure(lam)) {
            std::cout << "false (stratum [" << StratumLabel{fail->first}.str() << "], root "
                      << fail->second.str() << ")\n";
            return 0;
        }
    } else {
        if (auto alpha = first_orbital_failure(lam, ctx)) {
            std::cout << "false (orbit ratio exceeds p-1 at root " << alpha->str() << ")\n";
            return 0;
        }
        if (auto alpha = first_z0_failure(lam, P0)) {
            std::cout << "false (sign condition fails at root " << alpha->str() << ")\n";
            return 0;
        }
    }
    std::cout << "true\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Opts o;
    CLI::App app{"exact vanishing-degree certificates for automorphic bundles"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from a key=value file (flags win)");

    // Shared options live on the root so every subcommand (and the config
    // file) sees one consistent set; subcommands fall through to them.
    app.add_option("--g", o.g, "genus (>= 2)")->capture_default_str();
    app.add_option("--p", o.p, "odd prime")->capture_default_str();
    app.add_option("--I0", o.I0, "parabolic type: comma list of Levi generators, e.g. s1,s2");
    app.add_option("--e", o.e, "cohomological degree")->capture_default_str();
    app.add_option("--kmin", o.kmin, "box lower bound")->capture_default_str();
    app.add_option("--kmax", o.kmax, "box upper bound")->capture_default_str();
    app.add_option("--mode", o.mode, "ample-cone proxy")
        ->check(CLI::IsMember({"hasse", "orbital"}))
        ->capture_default_str();
    app.add_option("--ledger", o.ledger_path, "ledger file path");
    app.add_option("--out", o.out_path, "output file (stdout if absent)");
    app.add_option("--w", o.word, "Weyl word, e.g. \"s1 s2 s3\" (empty = identity)");
    app.add_option("--lambda", o.lambda, "weight, comma separated")->delimiter(',');
    app.add_flag("--reverse-columns", o.reverse_columns,
                 "export columns k_g..k_1 (as in the published g=2 data files)");
    app.add_flag("--cumulative", o.cumulative, "export V_e instead of V_e \\ V_{e-1}");
    app.add_flag("--seed-g2-special", o.seed_g2_special,
                 "also seed the hand-derived g=2 parallel families");

    auto mk = [&](const char* name, const char* desc) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->fallthrough();
        return cmd;
    };
    CLI::App* divisor_cmd = mk("divisor", "print the Hasse-invariant divisor of a stratum");
    CLI::App* ample_cmd = mk("ample", "test the ample-cone proxy");
    CLI::App* compute_cmd = mk("compute", "one propagation step for a single (I0, e)");
    CLI::App* compute_all_cmd = mk("compute-all", "one sweep over every parabolic type and degree");
    CLI::App* fixpoint_cmd = mk("fixpoint", "sweep until nothing changes");
    CLI::App* query_cmd = mk("query", "is the cohomology certified in degrees [0, e]?");
    CLI::App* export_cmd = mk("export", "write figure-data rows for one degree");
    CLI::App* plot_cmd = mk("plot", "render a g=2 scatter SVG of the ledger");
    CLI::App* show_cmd = mk("show-config", "print the effective configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (divisor_cmd->parsed()) {
            SystemContext ctx = make_context(o.g, o.p);
            std::cout << divisor(parse_lambda(o), from_word(o.g, o.word), ctx).str() << "\n";
            return 0;
        }
        if (ample_cmd->parsed()) return run_ample(o);
        if (compute_cmd->parsed()) return run_propagation(o, "compute");
        if (compute_all_cmd->parsed()) return run_propagation(o, "compute-all");
        if (fixpoint_cmd->parsed()) return run_propagation(o, "fixpoint");
        if (query_cmd->parsed()) {
            VanishingLedger led = open_ledger(o, true);
            std::cout << (vanishes(led, o.e, parse_lambda(o)) ? "true" : "false") << "\n";
            return 0;
        }
        if (export_cmd->parsed()) {
            VanishingLedger led = open_ledger(o, true);
            write_text(o.out_path, export_rows(led, o.e, o.cumulative, o.reverse_columns));
            return 0;
        }
        if (plot_cmd->parsed()) {
            VanishingLedger led = open_ledger(o, true);
            write_text(o.out_path, render_scatter_svg(led));
            return 0;
        }
        if (show_cmd->parsed()) {
            make_context(o.g, o.p); // validate before echoing
            make_box(o.kmin, o.kmax);
            ParabolicType P0 = parse_I0(o.g, o.I0);
            std::cout << "g=" << o.g << "\n"
                      << "p=" << o.p << "\n"
                      << "I0=" << P0.str() << "\n"
                      << "e=" << o.e << "\n"
                      << "kmin=" << o.kmin << "\n"
                      << "kmax=" << o.kmax << "\n"
                      << "mode=" << o.mode << "\n"
                      << "ledger=" << o.ledger_path << "\n"
                      << "out=" << o.out_path << "\n"
                      << "reverse-columns=" << (o.reverse_columns ? "true" : "false") << "\n"
                      << "cumulative=" << (o.cumulative ? "true" : "false") << "\n"
                      << "seed-g2-special=" << (o.seed_g2_special ? "true" : "false") << "\n";
            return 0;
        }
    } catch (const LedgerMismatch& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}

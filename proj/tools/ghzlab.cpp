#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ghz/bounds.hpp"
#include "ghz/classical.hpp"
#include "ghz/games.hpp"
#include "ghz/lp.hpp"
#include "ghz/quantum.hpp"
#include "ghz/report.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 ok, 2 usage, 3 precondition failure, 4 work-bound refusal.
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitWorkBound = 4;

struct Options {
    int n = 0;
    int d = 2;
    int modulo = 0;
    int m_bits = 0;
    std::string x_text;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::uint64_t trials = 0;
    std::uint64_t limit = ghz::kDefaultWorkBound;
    bool force = false;
    std::string format = "json";
    std::string out;
};

std::uint64_t default_limit() {
    if (const char* env = std::getenv("GHZLAB_WORK_BOUND")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed GHZLAB_WORK_BOUND\n";
    }
    return ghz::kDefaultWorkBound;
}

int resolve_modulo(const Options& opt) {
    if (opt.modulo > 0 && opt.m_bits > 0)
        throw CLI::ValidationError("--modulo and --m-bits are mutually exclusive");
    if (opt.m_bits > 0) return 1 << opt.m_bits;
    if (opt.modulo > 0) return opt.modulo;
    throw CLI::ValidationError("one of --modulo or --m-bits is required");
}

std::uint64_t effective_limit(const Options& opt) {
    if (!opt.force) return opt.limit;
    std::cerr << "warning: --force given, work-bound guard raised to 2^40\n";
    return std::uint64_t(1) << 40;
}

std::string config_json(const Options& opt, const std::string& command) {
    std::ostringstream os;
    os << "{\"tool\":\"ghzlab\",\"version\":\"" << kVersion << "\",\"command\":\""
       << command << "\",\"n\":" << opt.n << ",\"d\":" << opt.d
       << ",\"m\":" << (opt.m_bits > 0 ? (1 << opt.m_bits) : opt.modulo);
    if (!opt.x_text.empty()) os << ",\"x\":\"" << ghz::json_escape(opt.x_text) << "\"";
    if (opt.seed_set) os << ",\"seed\":" << opt.seed;
    if (opt.trials) os << ",\"trials\":" << opt.trials;
    os << ",\"limit\":" << effective_limit(opt) << "}";
    return os.str();
}

void emit(const Options& opt, const std::string& payload) {
    if (opt.out.empty() || opt.out == "-") {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
    f << payload;
    if (!payload.empty() && payload.back() != '\n') f << "\n";
}

std::string wrap(const Options& opt, const std::string& command, const std::string& result) {
    return "{\"config\":" + config_json(opt, command) + ",\"result\":" + result + "}";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laboratory for the arithmetic multiplayer games G_{n,D,M}"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Options opt;
    opt.limit = default_limit();

    auto add_common = [&](CLI::App* cmd, bool needs_game) {
        if (needs_game) {
            cmd->add_option("--n", opt.n, "player count")->required();
            cmd->add_option("--d", opt.d, "divisor (default 2)");
            cmd->add_option("--modulo", opt.modulo, "modulo M");
            cmd->add_option("--m-bits", opt.m_bits, "modulo as bit count, M = 2^m");
        }
        cmd->add_option("--limit", opt.limit, "work/memory bound (elementary items)");
        cmd->add_flag("--force", opt.force, "override the work-bound guard (warns)");
        cmd->add_option("--format", opt.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--out", opt.out, "output path (default stdout)");
    };

    auto* quantum = app.add_subcommand("quantum", "simulate the quantum strategy");
    add_common(quantum, true);
    bool q_verify = false, q_intermediate = false;
    quantum->add_option("--x", opt.x_text, "input string, player 1 leftmost");
    quantum->add_flag("--verify", q_verify, "sweep all promised inputs, report min win mass");
    quantum->add_flag("--intermediate", q_intermediate, "check the post-phase-step state");

    auto* pauli = app.add_subcommand("pauli", "Pauli-observable form checks (M = 2)");
    pauli->add_option("--n", opt.n, "player count")->required();
    add_common(pauli, false);

    auto* search = app.add_subcommand("search", "brute-force best deterministic strategy");
    add_common(search, true);
    bool reduced = false;
    search->add_flag("--reduced", reduced, "use the (d, b) reduction (D = 2 only)");

    auto* halving = app.add_subcommand("halving", "the shared-randomness halving strategy");
    add_common(halving, true);
    bool h_exact = false;
    halving->add_flag("--exact", h_exact, "exact win probability over all shared strings");
    halving->add_option("--trials", opt.trials, "Monte Carlo trial count");
    halving->add_option("--seed", opt.seed, "PRNG seed (required with --trials)");

    auto* lp = app.add_subcommand("lp", "certified LP value of the zero-sum game");
    add_common(lp, true);

    auto* bounds = app.add_subcommand("bounds", "bound formulas and crossover scan");
    bounds->add_option("--n", opt.n, "single-point report for this n");
    int n_max = 0;
    bounds->add_option("--n-max", n_max, "scan n = 1..n_max");
    bounds->add_option("--m-bits", opt.m_bits, "modulo as bit count")->required();
    add_common(bounds, false);

    auto* classify = app.add_subcommand("classify", "pseudo-telepathy classification");
    add_common(classify, true);

    auto* footnote = app.add_subcommand("footnote", "the M = 2(2r+1) divisor strategy");
    add_common(footnote, true);

    auto* bezout = app.add_subcommand("bezout", "perfect strategy when gcd(D,M) = 1");
    add_common(bezout, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    // CLI11 populated opt.seed whenever the flag appeared
    opt.seed_set = halving->count("--seed") > 0;

    try {
        std::uint64_t limit = effective_limit(opt);
        if (app.got_subcommand(quantum)) {
            ghz::GameSpec spec{opt.n, opt.d, resolve_modulo(opt)};
            if (q_verify) {
                ghz::CertaintyReport rep = ghz::verify_certainty(spec, limit);
                std::ostringstream os;
                os << "{\"min_win_probability\":" << ghz::fmt_double(rep.min_win_probability)
                   << ",\"max_deviation_from_uniform\":"
                   << ghz::fmt_double(rep.max_deviation_from_uniform)
                   << ",\"max_leak\":" << ghz::fmt_double(rep.max_leak)
                   << ",\"inputs_checked\":" << rep.inputs_checked << "}";
                emit(opt, wrap(opt, "quantum", os.str()));
            } else if (!opt.x_text.empty()) {
                ghz::InputString x = ghz::text_to_string(opt.x_text, spec.n, spec.d);
                if (!ghz::validate_input(spec, x))
                    throw ghz::PromiseViolationError("input violates the divisibility promise");
                if (q_intermediate) {
                    bool ok = ghz::intermediate_state_check(spec, x, limit);
                    emit(opt, wrap(opt, "quantum",
                                   std::string("{\"intermediate_state_ok\":") +
                                       (ok ? "true" : "false") + "}"));
                } else {
                    std::vector<double> probs = ghz::run_quantum_strategy(spec, x, limit);
                    emit(opt, wrap(opt, "quantum",
                                   ghz::json_distribution(spec, x, probs, ghz::kZeroThreshold)));
                }
            } else {
                throw CLI::ValidationError("quantum needs --x or --verify");
            }
        } else if (app.got_subcommand(pauli)) {
            bool ok = ghz::pauli_sign_check(opt.n, limit);
            emit(opt, wrap(opt, "pauli",
                           std::string("{\"pauli_sign_ok\":") + (ok ? "true" : "false") + "}"));
        } else if (app.got_subcommand(search)) {
            ghz::GameSpec spec{opt.n, opt.d, resolve_modulo(opt)};
            std::ostringstream os;
            if (reduced) {
                ghz::ReducedSearchResult res = ghz::brute_force_reduced(spec, limit);
                os << "{\"omega_tilde\":" << ghz::json_rational(res.value) << ",\"witness\":{\"d\":[";
                for (std::size_t j = 0; j < res.witness.d.size(); ++j) {
                    if (j) os << ",";
                    os << res.witness.d[j];
                }
                os << "],\"b\":" << res.witness.b << "}}";
            } else {
                ghz::SearchResult res = ghz::brute_force_omega_tilde(spec, limit);
                os << "{\"omega_tilde\":" << ghz::json_rational(res.value)
                   << ",\"witness\":" << ghz::json_strategy(spec, res.witness) << "}";
            }
            emit(opt, wrap(opt, "search", os.str()));
        } else if (app.got_subcommand(halving)) {
            ghz::GameSpec spec{opt.n, opt.d, resolve_modulo(opt)};
            std::ostringstream os;
            if (h_exact) {
                ghz::InputString x = opt.x_text.empty()
                                         ? ghz::InputString(spec.n, 0)
                                         : ghz::text_to_string(opt.x_text, spec.n, spec.d);
                ghz::Rational p = ghz::exact_win_probability(spec, x);
                os << "{\"win_probability\":" << ghz::json_rational(p) << "}";
            } else if (opt.trials > 0) {
                if (!opt.seed_set)
                    throw CLI::ValidationError("--seed is required for Monte Carlo runs");
                ghz::MonteCarloResult res =
                    ghz::monte_carlo(spec, ghz::HalvingTag{}, opt.trials, opt.seed);
                os << "{\"estimate\":" << ghz::fmt_double(res.estimate)
                   << ",\"halfwidth_95\":" << ghz::fmt_double(res.halfwidth_95)
                   << ",\"trials\":" << res.trials << ",\"seed\":" << res.seed << "}";
            } else {
                throw CLI::ValidationError("halving needs --exact or --trials");
            }
            emit(opt, wrap(opt, "halving", os.str()));
        } else if (app.got_subcommand(lp)) {
            ghz::GameSpec spec{opt.n, opt.d, resolve_modulo(opt)};
            ghz::LpResult res = ghz::exact_omega_lp(spec, limit);
            std::ostringstream os;
            os << "{\"omega\":" << ghz::json_rational(res.value)
               << ",\"certified\":" << (res.certified ? "true" : "false") << ",\"support\":[";
            for (std::size_t i = 0; i < res.support.size(); ++i) {
                if (i) os << ",";
                os << "{\"strategy_code\":" << res.support[i]
                   << ",\"mass\":" << ghz::json_rational(res.mixture[i]) << "}";
            }
            os << "],\"worst_case_inputs\":[";
            for (std::size_t i = 0; i < res.tight_rows.size(); ++i) {
                if (i) os << ",";
                os << res.tight_rows[i];
            }
            os << "]}";
            emit(opt, wrap(opt, "lp", os.str()));
        } else if (app.got_subcommand(bounds)) {
            if (n_max > 0) {
                ghz::CrossoverTable table = ghz::crossover_scan(opt.m_bits, n_max);
                if (opt.format == "csv")
                    emit(opt, ghz::crossover_csv(table));
                else
                    emit(opt, wrap(opt, "bounds", ghz::crossover_json(table)));
            } else if (opt.n > 0) {
                int m_modulo = 1 << opt.m_bits;
                std::ostringstream os;
                os << "{\"n\":" << opt.n << ",\"ell\":" << ghz::ell(opt.n)
                   << ",\"effective_min_m\":" << ghz::effective_min_m(opt.n)
                   << ",\"regime\":" << (ghz::regime_ok(opt.n, m_modulo) ? "true" : "false")
                   << ",\"mermin\":" << ghz::json_rational(ghz::mermin_bound(opt.n))
                   << ",\"tight\":" << ghz::json_rational(ghz::tight_bound(opt.n))
                   << ",\"griggs_count\":" << ghz::griggs_bound(opt.n, 2 * m_modulo, 1)
                   << ",\"asymptote\":" << ghz::fmt_double(ghz::asymptotic_bound(opt.n)) << "}";
                emit(opt, wrap(opt, "bounds", os.str()));
            } else {
                throw CLI::ValidationError("bounds needs --n or --n-max");
            }
        } else if (app.got_subcommand(classify)) {
            ghz::GameSpec spec{opt.n, opt.d, resolve_modulo(opt)};
            ghz::Classification c = ghz::classify_game(spec);
            std::ostringstream os;
            os << "{\"verdict\":\"" << ghz::verdict_name(c.verdict) << "\"";
            if (c.prime) os << ",\"prime\":" << *c.prime;
            if (c.perfect_witness)
                os << ",\"witness\":" << ghz::json_strategy(spec, *c.perfect_witness);
            os << "}";
            emit(opt, wrap(opt, "classify", os.str()));
        } else if (app.got_subcommand(footnote)) {
            ghz::GameSpec spec{opt.n, opt.d, resolve_modulo(opt)};
            ghz::FootnoteResult res = ghz::footnote_strategy(spec);
            std::ostringstream os;
            os << "{\"rate\":" << ghz::json_rational(res.rate)
               << ",\"strategy\":" << ghz::json_strategy(spec, res.strat) << "}";
            emit(opt, wrap(opt, "footnote", os.str()));
        } else if (app.got_subcommand(bezout)) {
            ghz::GameSpec spec{opt.n, opt.d, resolve_modulo(opt)};
            ghz::DeterministicStrategy strat = ghz::bezout_strategy(spec);
            ghz::StrategyReport rep = ghz::eval_deterministic(spec, strat, limit);
            std::ostringstream os;
            os << "{\"rate\":" << ghz::json_rational(rep.rate)
               << ",\"strategy\":" << ghz::json_strategy(spec, strat) << "}";
            emit(opt, wrap(opt, "bezout", os.str()));
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ghz::WorkBoundExceededError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitWorkBound;
    } catch (const ghz::InstanceTooLargeError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitWorkBound;
    } catch (const ghz::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

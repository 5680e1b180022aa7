// balance: command-line front end for the predetermined balance game.
//
// Reports go to stdout as JSON (schema "1"); --pretty renders them as text.
// Curves and sweeps are CSV. Prompts of the interactive `play` command go to
// stderr so stdout stays machine-readable.
//
// Exit codes: 0 success, 1 internal error, 2 usage or parse error,
// 3 capacity error, 4 resource error, 5 domain error, 6 dimension error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "balance/adversary.hpp"
#include "balance/analysis.hpp"
#include "balance/coverage.hpp"
#include "balance/game.hpp"
#include "balance/io.hpp"
#include "balance/montecarlo.hpp"
#include "balance/strategies.hpp"
#include "balance/verifier.hpp"

namespace {

using namespace balance;
using io::Json;

enum ExitCode : int {
    kOk = 0,
    kInternal = 1,
    kUsage = 2,
    kCapacity = 3,
    kResource = 4,
    kDomain = 5,
    kDimension = 6,
};

struct Options {
    std::string spec;
    std::string strategy_file;
    std::string mask;
    std::string kind = "ternary";
    std::string prior = "heavy";
    std::string curve;
    int n = 1;
    int q = 1;
    int k = 0;
    int qi = -1;
    int grid = 1000;
    int q_max = 3;
    double r = 2.0 / 3.0;
    double r2 = 0.0;
    double r2_max = 0.3;
    double p = 0.5;
    double delta = 0.1;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 42;
    bool constructive = false;
    bool exhaustive = false;
    bool as_player = false;
    bool pretty = false;
    int max_rounds = 16;
    std::uint64_t search_nodes = 100'000'000;
    std::uint64_t census_cap = 100'000'000;
};

VerifierLimits limits_of(const Options& o) {
    VerifierLimits limits;
    limits.masks.max_rounds = o.max_rounds;
    limits.search_nodes = o.search_nodes;
    limits.census_matrices = o.census_cap;
    return limits;
}

class Timer {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string survivors_text(const std::vector<Hypothesis>& hs) {
    std::string out;
    for (const auto& h : hs) {
        if (!out.empty()) out += ' ';
        out += "coin " + std::to_string(h.coin + 1) + (h.sign == Sign::Heavy ? " heavier" : " lighter");
    }
    return out.empty() ? "(none)" : out;
}

// Text rendering for --pretty: one "key: value" line per scalar, nested
// objects indented, arrays of scalars joined by spaces.
void render_pretty(std::ostream& out, const Json& j, int indent = 0) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        if (v.is_object()) {
            out << pad << it.key() << ":\n";
            render_pretty(out, v, indent + 2);
        } else if (v.is_array()) {
            out << pad << it.key() << ":";
            bool scalars = std::all_of(v.begin(), v.end(), [](const Json& e) { return !e.is_structured(); });
            if (scalars) {
                for (const auto& e : v) out << ' ' << (e.is_string() ? e.get<std::string>() : e.dump());
                out << '\n';
            } else {
                out << '\n';
                for (const auto& e : v) {
                    out << pad << "  -";
                    for (auto f = e.begin(); f != e.end(); ++f)
                        out << ' ' << f.key() << '=' << (f.value().is_string() ? f.value().get<std::string>() : f.value().dump());
                    out << '\n';
                }
            }
        } else {
            out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
        }
    }
}

void emit(const Options& o, Json doc, const Timer& timer) {
    doc["elapsed_ms"] = timer.elapsed_ms();
    if (o.pretty)
        render_pretty(std::cout, doc);
    else
        std::cout << doc.dump(2) << '\n';
}

GameSpec spec_of(const Options& o) { return GameSpec::parse(o.spec); }

int cmd_construct(const Options& o) {
    StrategyMatrix s;
    if (o.kind == "binary")
        s = binary_strategy(o.n, o.q);
    else if (o.kind == "ternary")
        s = ternary_strategy(o.n, o.q);
    else if (o.kind == "complement-free")
        s = complement_free_strategy(o.n, o.q);
    else if (o.kind == "random")
        s = random_strategy(o.n, o.q, {o.r, o.seed});
    else
        throw ParseError("unknown strategy kind '" + o.kind + "'");
    std::cout << io::format_strategy(s);
    return kOk;
}

int cmd_adjudicate(const Options& o) {
    Timer timer;
    const GameSpec spec = spec_of(o);
    const StrategyMatrix s = io::read_strategy_file(o.strategy_file);
    const Mask mask = Mask::parse(o.mask);
    const Verdict v = adjudicate(spec, s, mask);
    Json doc = io::report("adjudicate");
    doc["spec"] = io::to_json(spec);
    doc["mask"] = mask.to_string();
    doc.update(io::to_json(v));
    emit(o, std::move(doc), timer);
    return kOk;
}

int cmd_attack(const Options& o) {
    Timer timer;
    const GameSpec spec = spec_of(o);
    const StrategyMatrix s = io::read_strategy_file(o.strategy_file);
    const auto attack = o.constructive ? constructive_attack(spec, s) : find_winning_mask(spec, s, limits_of(o).masks);
    Json doc = io::report("attack");
    doc["spec"] = io::to_json(spec);
    doc["outcome"] = attack ? "balance-wins" : (o.constructive ? "no-structural-weakness" : "perfect");
    doc["attack"] = attack ? io::to_json(*attack) : Json(nullptr);
    emit(o, std::move(doc), timer);
    return kOk;
}

int cmd_certify(const Options& o) {
    Timer timer;
    const GameSpec spec = spec_of(o);
    const StrategyMatrix s = io::read_strategy_file(o.strategy_file);
    Json doc = io::report("certify");
    doc["spec"] = io::to_json(spec);
    doc.update(io::to_json(certify(spec, s, limits_of(o))));
    emit(o, std::move(doc), timer);
    return kOk;
}

int cmd_value(const Options& o) {
    Timer timer;
    const GameSpec spec = spec_of(o);
    const GameValue v = game_value(spec, o.exhaustive ? ProofMode::Exhaustive : ProofMode::Constructive, limits_of(o));
    Json doc = io::report("value");
    doc["spec"] = io::to_json(spec);
    doc.update(io::to_json(v));
    emit(o, std::move(doc), timer);
    return kOk;
}

int cmd_census(const Options& o) {
    Timer timer;
    const Prior prior = prior_from_string(o.prior);
    const std::uint64_t count = census_perfect(o.n, o.q, prior, 0, limits_of(o));
    const std::uint64_t matrices = checked_pow(3, o.n * o.q);
    Json doc = io::report("census");
    doc["spec"] = io::to_json(GameSpec::make(o.n, o.q, 0, prior));
    doc["perfect_matrices"] = count;
    doc["matrices"] = matrices;
    doc["rate"] = static_cast<double>(count) / static_cast<double>(matrices);
    if (prior == Prior::Unknown && static_cast<std::uint64_t>(o.n) == (checked_pow(3, o.q) - 1) / 2) {
        const auto ref = perfect_count_reference(o.n, o.q);
        doc["reference"] = Json{{"with_column_factor", ref.with_column_factor},
                                {"codebook_times_order", ref.codebook_times_order}};
        doc["matches"] = count == ref.with_column_factor     ? "with_column_factor"
                         : count == ref.codebook_times_order ? "codebook_times_order"
                                                             : "neither";
    }
    emit(o, std::move(doc), timer);
    return kOk;
}

int cmd_sweep(const Options& o) {
    const Prior prior = prior_from_string(o.prior);
    const auto rows = theorem_sweep(o.q_max, prior, o.k, limits_of(o));
    auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
    std::cout << "q,player_max_n,balance_min_n,player_mode,balance_mode,honest_threshold,paper_counting_threshold,"
                 "exact_counting_threshold\n";
    for (const auto& r : rows) {
        std::cout << r.q << ',' << opt(r.player_max_n) << ',' << opt(r.balance_min_n) << ','
                  << (r.player_max_n ? to_string(r.player_mode) : "") << ','
                  << (r.balance_min_n ? to_string(r.balance_mode) : "") << ',' << opt(r.honest_threshold) << ','
                  << r.paper_counting_threshold << ',' << r.exact_counting_threshold << '\n';
    }
    return kOk;
}

int cmd_analyze(const Options& o) {
    namespace an = analysis;
    std::vector<std::vector<double>> rows;
    std::vector<std::string> header;
    if (o.curve == "g") {
        header = {"r", "g"};
        for (double r : an::open_grid(0.0, 1.0, o.grid)) rows.push_back({r, an::g_rate(r)});
    } else if (o.curve == "v") {
        header = {"r", "v"};
        int outside = 0;
        for (double r : an::open_grid(o.r2, 1.0, o.grid)) {
            rows.push_back({r, an::v_rate(r, o.r2)});
            if (o.r2 > 0.0 && !an::v_rate_in_approximation_region(r, o.r2)) ++outside;
        }
        if (outside > 0)
            std::cerr << "warning: " << outside << " of " << o.grid
                      << " points have (r - r2)/r > 1/2, where the entropy estimate of the binomial tail is loose\n";
    } else if (o.curve == "f") {
        header = {"p", "f"};
        RowProfile profile{std::vector<int>(static_cast<std::size_t>(o.n), o.qi < 0 ? o.q : o.qi)};
        for (double p : an::open_grid(0.0, 0.5, o.grid)) rows.push_back({p, an::f_honest(profile, p, o.q)});
    } else if (o.curve == "phi") {
        header = {"p", "phi"};
        for (double p : an::open_grid(0.0, 0.5, o.grid)) rows.push_back({p, an::phi(p, o.r, o.q)});
    } else if (o.curve == "optimal-r") {
        header = {"r2", "argmax", "max"};
        for (int i = 0; i < o.grid; ++i) {
            const double r2 = o.grid == 1 ? 0.0 : o.r2_max * i / (o.grid - 1.0);
            const auto best = an::optimal_r(r2);
            rows.push_back({r2, best.argmax, best.max});
        }
    } else {
        throw ParseError("unknown curve '" + o.curve + "'");
    }
    std::cout << io::format_csv(header, rows);
    return kOk;
}

int cmd_simulate(const Options& o) {
    Timer timer;
    const GameSpec spec = spec_of(o);
    Json doc = io::report("simulate");
    doc.update(io::to_json(simulate_random_player(spec, o.r, o.trials, o.seed, limits_of(o))));
    emit(o, std::move(doc), timer);
    return kOk;
}

int cmd_concentrate(const Options& o) {
    Timer timer;
    Json doc = io::report("concentrate");
    doc.update(io::to_json(concentration_experiment(o.q, o.r, o.delta, o.trials, o.seed)));
    emit(o, std::move(doc), timer);
    return kOk;
}

int cmd_perfect_rate(const Options& o) {
    Timer timer;
    Json doc = io::report("perfect-rate");
    doc.update(io::to_json(random_perfect_rate(o.n, o.q, prior_from_string(o.prior), o.trials, o.seed, limits_of(o))));
    emit(o, std::move(doc), timer);
    return kOk;
}

// The balance's reply when it cannot win: the first mask with the most
// survivors, so the player is left with as little certainty as possible.
Mask best_reply(const GameSpec& spec, const StrategyMatrix& s, const EnumerationLimits& limits) {
    if (auto attack = find_winning_mask(spec, s, limits)) return attack->mask;
    MaskCoverage coverage(spec, s);
    std::uint64_t best = 0;
    for (std::uint64_t m = 1; m < coverage.mask_count(); ++m)
        if (coverage.survivors(m) > coverage.survivors(best)) best = m;
    return Mask::from_index(best, spec.q);
}

int cmd_play(const Options& o) {
    const GameSpec spec = spec_of(o);
    StrategyMatrix s;
    Mask mask;
    if (o.as_player) {
        std::cerr << "enter " << spec.n << " rows of " << spec.q << " placements (L/R/O):\n";
        std::string text;
        std::string line;
        int rows = 0;
        while (rows < spec.n && std::getline(std::cin, line)) {
            if (line.empty() || line.front() == '#') continue;
            text += line + '\n';
            ++rows;
        }
        s = io::parse_strategy(text);
        s.check_shape(spec);
        mask = best_reply(spec, s, limits_of(o).masks);
        std::cerr << "balance announces " << mask.to_string() << '\n';
    } else {
        s = io::read_strategy_file(o.strategy_file);
        s.check_shape(spec);
        std::cerr << "announce " << spec.q << " outcomes (L/R/D): ";
        std::string line;
        if (!std::getline(std::cin, line)) throw ParseError("no mask given on standard input");
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        mask = Mask::parse(line);
    }
    Timer timer;
    const Verdict v = adjudicate(spec, s, mask);
    std::cerr << to_string(v.kind) << ": " << survivors_text(v.survivors) << '\n';
    Json doc = io::report("play");
    doc["spec"] = io::to_json(spec);
    doc["mask"] = mask.to_string();
    doc.update(io::to_json(v));
    emit(o, std::move(doc), timer);
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Predetermined balance game: strategies, adversary, certification and analysis"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;

    app.add_flag("--pretty", o.pretty, "Render reports as text instead of JSON");
    app.add_option("--max-rounds", o.max_rounds, "Largest q whose 3^q masks may be enumerated")->capture_default_str();
    app.add_option("--search-nodes", o.search_nodes, "Node budget of the exhaustive game search")->capture_default_str();
    app.add_option("--census-cap", o.census_cap, "Largest number of matrices a census may enumerate")
        ->capture_default_str();

    auto add_spec = [&](CLI::App* sub) { sub->add_option("--spec", o.spec, "Game as n,q,k,prior")->required(); };
    auto add_strategy = [&](CLI::App* sub) {
        sub->add_option("--strategy", o.strategy_file, "Strategy file")->required()->check(CLI::ExistingFile);
    };

    auto* construct = app.add_subcommand("construct", "Print a strategy file");
    construct->add_option("--kind", o.kind, "binary | ternary | complement-free | random")
        ->check(CLI::IsMember({"binary", "ternary", "complement-free", "random"}));
    construct->add_option("--n", o.n)->required();
    construct->add_option("--q", o.q)->required();
    construct->add_option("--r", o.r, "On-balance probability (random)");
    construct->add_option("--seed", o.seed);

    auto* adjud = app.add_subcommand("adjudicate", "Decide one playout");
    add_spec(adjud);
    add_strategy(adjud);
    adjud->add_option("--mask", o.mask, "Mask string over L, R, D")->required();

    auto* attack = app.add_subcommand("attack", "Search for a mask that defeats a strategy");
    add_spec(attack);
    add_strategy(attack);
    attack->add_flag("--constructive", o.constructive, "Use structural attacks only (k = 0)");

    auto* cert = app.add_subcommand("certify", "Check a strategy against every mask");
    add_spec(cert);
    add_strategy(cert);

    auto* value = app.add_subcommand("value", "Decide which side has a must-win strategy");
    add_spec(value);
    value->add_flag("--exhaustive", o.exhaustive, "Search all strategies instead of using the theorems");

    auto* census = app.add_subcommand("census", "Count perfect strategy matrices");
    census->add_option("--n", o.n)->required();
    census->add_option("--q", o.q)->required();
    census->add_option("--prior", o.prior)->check(CLI::IsMember({"heavy", "unknown"}));

    auto* sweep = app.add_subcommand("sweep", "Player/balance boundary for q = 1..qmax (CSV)");
    sweep->add_option("--qmax", o.q_max)->required();
    sweep->add_option("--prior", o.prior)->check(CLI::IsMember({"heavy", "unknown"}));
    sweep->add_option("--k", o.k);

    auto* analyze = app.add_subcommand("analyze", "Sample a rate curve (CSV)");
    analyze->add_option("--curve", o.curve, "g | v | f | phi | optimal-r")
        ->required()
        ->check(CLI::IsMember({"g", "v", "f", "phi", "optimal-r"}));
    analyze->add_option("--grid", o.grid, "Number of grid points")->capture_default_str();
    analyze->add_option("--r2", o.r2, "Lie fraction k/q (v curve)");
    analyze->add_option("--r2-max", o.r2_max, "Largest r2 (optimal-r curve)")->capture_default_str();
    analyze->add_option("--r", o.r, "On-balance fraction (phi curve)");
    analyze->add_option("--n", o.n, "Coins (f curve)");
    analyze->add_option("--q", o.q, "Rounds (f, phi curves)");
    analyze->add_option("--qi", o.qi, "On-balance rounds per coin (f curve, default q)");

    auto* simulate = app.add_subcommand("simulate", "Balance win rate against a random player");
    add_spec(simulate);
    simulate->add_option("--r", o.r)->required();
    simulate->add_option("--trials", o.trials)->capture_default_str();
    simulate->add_option("--seed", o.seed)->capture_default_str();

    auto* concentrate = app.add_subcommand("concentrate", "On-balance fraction tail vs. Chernoff bound");
    concentrate->add_option("--q", o.q)->required();
    concentrate->add_option("--r", o.r)->capture_default_str();
    concentrate->add_option("--delta", o.delta)->capture_default_str();
    concentrate->add_option("--trials", o.trials)->capture_default_str();
    concentrate->add_option("--seed", o.seed)->capture_default_str();

    auto* prate = app.add_subcommand("perfect-rate", "Fraction of uniform random matrices that are perfect");
    prate->add_option("--n", o.n)->required();
    prate->add_option("--q", o.q)->required();
    prate->add_option("--prior", o.prior)->check(CLI::IsMember({"heavy", "unknown"}));
    prate->add_option("--trials", o.trials)->capture_default_str();
    prate->add_option("--seed", o.seed)->capture_default_str();

    auto* play = app.add_subcommand("play", "One-shot interactive game");
    add_spec(play);
    play->add_option("--strategy", o.strategy_file, "Strategy file (you play the balance)");
    play->add_flag("--as-player", o.as_player, "Enter a strategy; the engine answers with its best mask");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*construct) return cmd_construct(o);
        if (*adjud) return cmd_adjudicate(o);
        if (*attack) return cmd_attack(o);
        if (*cert) return cmd_certify(o);
        if (*value) return cmd_value(o);
        if (*census) return cmd_census(o);
        if (*sweep) return cmd_sweep(o);
        if (*analyze) return cmd_analyze(o);
        if (*simulate) return cmd_simulate(o);
        if (*concentrate) return cmd_concentrate(o);
        if (*prate) return cmd_perfect_rate(o);
        if (*play) {
            if (!o.as_player && o.strategy_file.empty()) throw ParseError("play needs --strategy or --as-player");
            return cmd_play(o);
        }
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kCapacity;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << '\n';
        return kResource;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const DimensionError& e) {
        std::cerr << "dimension error: " << e.what() << '\n';
        return kDimension;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInternal;
    }
    return kInternal;
}

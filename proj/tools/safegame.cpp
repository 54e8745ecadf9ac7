/*
 * Copyright 2026 The safegame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


/*
 * safegame: command-line front end.
 *
 * Exit codes: 0 = positive answer (A wins, check passed, ...), 1 = negative
 * answer, 2 = usage, input or resource error. Machine output is line-oriented
 * key-value text; wall time is always printed on its own line so the rest of
 * the output is reproducible byte for byte.
 */

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "safegame/gamegen.hpp"
#include "safegame/io.hpp"
#include "safegame/minsize.hpp"
#include "safegame/simulation.hpp"
#include "safegame/solvers.hpp"
#include "safegame/strategy.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace sg;
using Clock = std::chrono::steady_clock;

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/// Everything a command produces besides its exit code; mirrored into --report.
struct Run {
    json report = json::object();

    void line(const std::string& key, const std::string& value)
    {
        std::cout << key << ' ' << value << '\n';
    }
    void stat(const std::string& key, std::size_t value)
    {
        std::cout << "stat " << key << ' ' << value << '\n';
        report["stats"][key] = value;
    }
    void wall(double ms)
    {
        std::ostringstream s;
        s.setf(std::ios::fixed);
        s.precision(3);
        s << ms;
        std::cout << "wall_time_ms " << s.str() << '\n';
        report["wall_time_ms"] = ms;
    }
};

/**
 * A game given on the command line: a path to a game file, or one of the
 * implicit families "nim:<N>", "nim:<N>+extras" and "vector:<dims>x<bound>".
 */
struct LoadedGame {
    std::unique_ptr<Game> game;
    const ExplicitGame* explicit_game = nullptr;
};

int parse_int(const std::string& s, const std::string& what)
{
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        pos = 0;
    }
    if (pos == 0 || pos != s.size()) throw Error(ErrorKind::Parse, "bad " + what + " '" + s + "'");
    return v;
}

LoadedGame load_any(const std::string& src)
{
    LoadedGame out;
    if (src.rfind("nim:", 0) == 0) {
        std::string body = src.substr(4);
        bool extras = false;
        if (auto plus = body.find('+'); plus != std::string::npos) {
            if (body.substr(plus) != "+extras") throw Error(ErrorKind::Parse, "bad game spec '" + src + "'");
            extras = true;
            body.resize(plus);
        }
        out.game = std::make_unique<NimGame>(NimModel(NimSpec(parse_int(body, "urn size"), extras)));
    } else if (src.rfind("vector:", 0) == 0) {
        std::string body = src.substr(7);
        auto x = body.find('x');
        if (x == std::string::npos) throw Error(ErrorKind::Parse, "bad game spec '" + src + "'");
        auto spec = VectorGameSpec::standard(parse_int(body.substr(0, x), "dimension"),
                                             parse_int(body.substr(x + 1), "bound"));
        out.game = std::make_unique<VectorGame>(VectorModel(spec));
    } else {
        auto g = std::make_unique<ExplicitGame>(load_game(src));
        out.explicit_game = g.get();
        out.game = std::move(g);
    }
    return out;
}

const ExplicitGame& need_explicit(const LoadedGame& g, const std::string& what)
{
    if (!g.explicit_game) throw Error(ErrorKind::Capability, what + " needs a game file");
    return *g.explicit_game;
}

void write_to(const std::string& path, const std::function<void(std::ostream&)>& emit)
{
    if (path.empty() || path == "-") {
        emit(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
    emit(out);
}

json names(const Game& g, const std::vector<VertexId>& ids)
{
    json out = json::array();
    for (VertexId v : ids) out.push_back(std::string(g.name(v)));
    return out;
}

json strategy_json(const Game& g, const StarStrategy& s)
{
    json out = json::object();
    for (auto [v, w] : s.entries()) out[std::string(g.name(v))] = std::string(g.name(w));
    return out;
}

// --- solve ---------------------------------------------------------------------

struct SolveConfig {
    std::string game;
    std::string algo = "otfur";
    std::string order = "equality";
    std::string waiting = "fifo";
    bool check_invariants = false;
    bool trust_order = false;
    std::size_t max_iterations = 0;
    std::size_t sample_pairs = 20000;
    std::string strategy_out;
};

/// Validates the order before (explicit) or after (implicit) the solver ran.
std::optional<Violation> order_problem(const PartialOrder& o, const Game& g, std::size_t sample_pairs)
{
    Violations v;
    if (g.as_explicit()) {
        v = check_tba_simulation(o, g);
    } else {
        std::vector<VertexId> seen(g.known_vertices());
        for (VertexId i = 0; i < seen.size(); ++i) seen[i] = i;
        v = check_tba_sample(o, g, seen, sample_pairs);
    }
    if (v.empty()) return std::nullopt;
    return v.front();
}

int cmd_solve(const SolveConfig& c, Run& run)
{
    auto start = Clock::now();
    auto lg = load_any(c.game);
    const Game& g = *lg.game;
    run.report["game"] = c.game;
    run.report["algo"] = c.algo;

    if (c.algo == "attractor") {
        auto r = solve_attractor(g);
        bool a = r.win.contains(g.initial());
        run.line("winner", a ? "A" : "B");
        run.report["winner"] = a ? "A" : "B";
        run.stat("rounds", r.rounds);
        if (a && !c.strategy_out.empty()) {
            auto s = strategy_from_region(need_explicit(lg, "attractor"), r.win);
            write_to(c.strategy_out, [&](std::ostream& o) { write_strategy(o, s, g); });
            run.report["strategy"] = strategy_json(g, s);
        }
        run.wall(ms_since(start));
        return a ? kYes : kNo;
    }

    OtfurOptions opts;
    opts.waiting = c.waiting == "lifo" ? WaitingOrder::Lifo : WaitingOrder::Fifo;
    opts.check_invariants = c.check_invariants;
    opts.max_iterations = c.max_iterations;
    run.report["waiting"] = c.waiting;

    std::unique_ptr<PartialOrder> order;
    SolveResult r;
    if (c.algo == "otfur") {
        r = solve_otfur(g, opts);
    } else {
        order = make_order(c.order, g);
        run.report["order"] = c.order;
        if (!c.trust_order && g.as_explicit()) {
            if (auto p = order_problem(*order, g, c.sample_pairs)) {
                std::cerr << "error: order is not a tba-simulation: " << p->message
                          << " (pass --trust-order to skip this check)\n";
                run.report["error"] = p->message;
                return kError;
            }
        }
        r = solve_otfur_antichain(g, *order, opts);
        if (!c.trust_order && !g.as_explicit()) {
            if (auto p = order_problem(*order, g, c.sample_pairs)) {
                std::cerr << "error: sampled order check failed on explored states: " << p->message << '\n';
                run.report["error"] = p->message;
                return kError;
            }
        }
    }

    const bool a = r.winner == Winner::AWins;
    run.line("winner", a ? "A" : "B");
    run.report["winner"] = a ? "A" : "B";
    run.stat("vertices_explored", r.stats.vertices_explored);
    run.stat("edges_popped", r.stats.edges_popped);
    run.stat("reevaluations", r.stats.reevaluations);
    run.stat("postponements", r.stats.postponements);
    if (order) {
        run.report["anti_maybe"] = names(g, r.anti_maybe);
        run.report["anti_losing"] = names(g, r.anti_losing);
    }
    if (a && r.strategy) {
        run.line("strategy_size", std::to_string(r.strategy->size()));
        run.report["strategy"] = strategy_json(g, *r.strategy);
        if (!c.strategy_out.empty())
            write_to(c.strategy_out, [&](std::ostream& o) { write_strategy(o, *r.strategy, g); });
    }
    run.wall(ms_since(start));
    return a ? kYes : kNo;
}

// --- verify --------------------------------------------------------------------

int report_violations(const Violations& v, const std::string& ok_line, Run& run)
{
    run.report["violations"] = json::array();
    for (const auto& x : v) run.report["violations"].push_back({{"kind", x.kind}, {"message", x.message}});
    if (v.empty()) {
        run.line("result", ok_line);
        return kYes;
    }
    run.line("result", "violation");
    run.line("violation", v.front().kind + ": " + v.front().message);
    return kNo;
}

int cmd_verify_tba(const std::string& game, const std::string& order_spec, Run& run)
{
    auto lg = load_any(game);
    const auto& g = need_explicit(lg, "verify tba-sim");
    auto o = make_order(order_spec, g);
    run.report["game"] = game;
    run.report["order"] = order_spec;
    if (auto v = check_partial_order(*o, g); !v.empty()) return report_violations(v, "", run);
    return report_violations(check_tba_simulation(*o, g), "tba-simulation", run);
}

int cmd_verify_strategy(const std::string& game, const std::string& strat, const std::string& mode,
                        const std::string& order_spec, Run& run)
{
    auto lg = load_any(game);
    const auto& g = need_explicit(lg, "verify strategy");
    auto s = load_strategy(strat, g);
    run.report["game"] = game;
    run.report["strategy_file"] = strat;
    run.report["mode"] = mode;
    bool ok;
    if (mode == "winning") {
        ok = is_winning_star(g, s);
    } else {
        auto o = make_order(order_spec, g);
        run.report["order"] = order_spec;
        auto r = check_order_winning_star(g, s, *o);
        ok = r.verdict();
        if (!r.no_concretisation.empty()) {
            run.line("no_concretisation_at", std::string(g.name(r.no_concretisation.front())));
            run.report["no_concretisation"] = names(g, r.no_concretisation);
        }
    }
    run.line("verdict", ok ? "true" : "false");
    run.report["verdict"] = ok;
    return ok ? kYes : kNo;
}

// --- minsize -------------------------------------------------------------------

int cmd_minsize(const std::string& game, std::optional<std::size_t> k, std::size_t budget,
                const std::string& witness_out, Run& run)
{
    auto start = Clock::now();
    auto lg = load_any(game);
    const auto& g = need_explicit(lg, "minsize");
    run.report["game"] = game;
    run.report["budget"] = budget;
    if (k) {
        run.report["k"] = *k;
        auto d = decide_minsizestrat(g, *k, budget);
        const char* word = d == Decision::Yes ? "yes" : d == Decision::No ? "no" : "budget-exhausted";
        run.line("decision", word);
        run.report["decision"] = word;
        run.wall(ms_since(start));
        return d == Decision::Yes ? kYes : d == Decision::No ? kNo : kError;
    }
    auto r = min_star_strategy_size(g, budget);
    run.stat("search_nodes", r.nodes);
    int code = kError;
    switch (r.status) {
    case MinSizeStatus::Found:
        std::cout << "size " << r.size << '\n';
        run.report["size"] = r.size;
        run.report["witness"] = strategy_json(g, r.witness);
        if (!witness_out.empty())
            write_to(witness_out, [&](std::ostream& o) { write_strategy(o, r.witness, g); });
        code = kYes;
        break;
    case MinSizeStatus::NoWinningStrategy:
        std::cout << "no-winning-strategy\n";
        run.report["size"] = nullptr;
        code = kNo;
        break;
    case MinSizeStatus::BudgetExhausted:
        std::cout << "budget-exhausted\n";
        run.report["size"] = nullptr;
        break;
    }
    run.report["status"] = r.status == MinSizeStatus::Found                ? "found"
                           : r.status == MinSizeStatus::NoWinningStrategy ? "no-winning-strategy"
                                                                          : "budget-exhausted";
    run.wall(ms_since(start));
    return code;
}

// --- gen -----------------------------------------------------------------------

struct GenOutput {
    std::string out;
    std::string order_out;
};

int emit_fixture(const Fixture& f, const GenOutput& o, Run& run)
{
    write_to(o.out, [&](std::ostream& s) { write_game(s, *f.game); });
    if (!o.order_out.empty()) {
        if (!f.order) throw Error(ErrorKind::Precondition, "this family has no order");
        write_to(o.order_out, [&](std::ostream& s) { write_order(s, *f.order, *f.game); });
    }
    run.report["game"] = f.game->game_name();
    run.report["vertices"] = f.game->size();
    run.report["edges"] = f.game->num_edges();
    return kYes;
}

// --- bench ---------------------------------------------------------------------

std::vector<int> parse_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_int(item, "instance size"));
    if (out.empty()) throw Error(ErrorKind::Parse, "empty instance list");
    return out;
}

struct BenchConfig {
    std::string family;
    std::string sizes = "50,100,200";
    int dims = 2;
    std::string waiting = "lifo";
    bool no_extras = false;
};

int cmd_bench(const BenchConfig& c, Run& run)
{
    OtfurOptions opts;
    opts.waiting = c.waiting == "fifo" ? WaitingOrder::Fifo : WaitingOrder::Lifo;
    run.report["family"] = c.family;
    run.report["waiting"] = c.waiting;
    run.report["rows"] = json::array();
    std::cout << "# instance algo vertices_explored edges_popped\n";
    std::vector<std::string> walls;
    bool pruned_everywhere = true;
    for (int n : parse_list(c.sizes)) {
        std::unique_ptr<Game> fresh[2];
        std::string inst;
        for (auto& gptr : fresh) {
            if (c.family == "nim") {
                gptr = std::make_unique<NimGame>(NimModel(NimSpec(n, !c.no_extras)));
                inst = "nim" + std::to_string(n);
            } else {
                gptr = std::make_unique<VectorGame>(VectorModel(VectorGameSpec::standard(c.dims, n)));
                inst = "vector" + std::to_string(c.dims) + "x" + std::to_string(n);
            }
        }
        std::size_t explored[2] = {0, 0};
        for (int i = 0; i < 2; ++i) {
            const Game& g = *fresh[i];
            auto start = Clock::now();
            SolveResult r;
            std::string algo = i == 0 ? "otfur" : "otfur-ac";
            if (i == 0) {
                r = solve_otfur(g, opts);
            } else {
                auto o = make_order(c.family == "nim" ? "nim-mod3" : "vector", g);
                r = solve_otfur_antichain(g, *o, opts);
            }
            double ms = ms_since(start);
            explored[i] = r.stats.vertices_explored;
            std::cout << "row " << inst << ' ' << algo << ' ' << r.stats.vertices_explored << ' '
                      << r.stats.edges_popped << '\n';
            std::ostringstream w;
            w.setf(std::ios::fixed);
            w.precision(3);
            w << "wall_time_ms " << inst << ' ' << algo << ' ' << ms;
            walls.push_back(w.str());
            run.report["rows"].push_back({{"instance", inst},
                                          {"algo", algo},
                                          {"winner", to_string(r.winner)},
                                          {"vertices_explored", r.stats.vertices_explored},
                                          {"edges_popped", r.stats.edges_popped},
                                          {"reevaluations", r.stats.reevaluations},
                                          {"postponements", r.stats.postponements},
                                          {"wall_time_ms", ms}});
        }
        std::cout << "ratio " << inst << ' ' << explored[1] << '/' << explored[0] << '\n';
        pruned_everywhere = pruned_everywhere && explored[1] < explored[0];
    }
    for (const auto& w : walls) std::cout << w << '\n';
    return pruned_everywhere ? kYes : kNo;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"safegame: solver and strategy tools for turn-based safety games"};
    app.require_subcommand(1, 1);
    app.fallthrough();  // global options may follow the subcommand
    std::string report_path;
    app.add_option("--report", report_path, "Also write a JSON run report to this file");

    // solve
    SolveConfig sc;
    auto* solve = app.add_subcommand("solve", "Decide the winner and extract a strategy");
    solve->add_option("game", sc.game, "Game file, or nim:<N>[+extras] / vector:<dims>x<bound>")->required();
    solve->add_option("--algo", sc.algo, "attractor | otfur | otfur-ac (default otfur)")
        ->check(CLI::IsMember({"attractor", "otfur", "otfur-ac"}));
    solve->add_option("--order", sc.order, "equality | nim-mod3 | vector | file:<path> (default equality)");
    solve->add_option("--waiting", sc.waiting, "fifo | lifo (default fifo)")->check(CLI::IsMember({"fifo", "lifo"}));
    solve->add_flag("--check-invariants", sc.check_invariants, "Probe the loop invariants at every iteration");
    solve->add_flag("--trust-order", sc.trust_order, "Skip the tba-simulation check of the order");
    solve->add_option("--max-iterations", sc.max_iterations, "Iteration cap (0 = automatic)");
    solve->add_option("--sample-pairs", sc.sample_pairs, "Pairs sampled when checking an implicit order");
    solve->add_option("--strategy-out", sc.strategy_out, "Write the strategy here");

    // verify
    auto* verify = app.add_subcommand("verify", "Check an order or a strategy");
    verify->require_subcommand(1, 1);
    std::string v_game, v_order = "equality", v_strat, v_mode;
    auto* vtba = verify->add_subcommand("tba-sim", "Is the order a turn-based alternating simulation?");
    vtba->add_option("game", v_game)->required();
    vtba->add_option("--order", v_order)->required();
    auto* vstr = verify->add_subcommand("strategy", "Is a (partial) strategy winning?");
    vstr->add_option("game", v_game)->required();
    vstr->add_option("strategy", v_strat)->required();
    vstr->add_option("--mode", v_mode, "winning | order-winning")
        ->required()
        ->check(CLI::IsMember({"winning", "order-winning"}));
    vstr->add_option("--order", v_order, "Order for --mode order-winning (default equality)");

    // minsize
    auto* minsize = app.add_subcommand("minsize", "Smallest winning partial strategy");
    std::string m_game, m_witness;
    std::optional<std::size_t> m_k;
    std::size_t m_budget = 10'000'000;
    minsize->add_option("game", m_game)->required();
    minsize->add_option("--k", m_k, "Only decide whether a winning strategy of size <= k exists");
    minsize->add_option("--budget", m_budget, "Search-node budget (default 10000000)");
    minsize->add_option("--witness-out", m_witness, "Write a minimum strategy here");

    // gen
    auto* gen = app.add_subcommand("gen", "Generate games");
    gen->require_subcommand(1, 1);
    GenOutput go;
    auto outputs = [&](CLI::App* sub) {
        sub->add_option("--out", go.out, "Game file (default stdout)");
        sub->add_option("--order-out", go.order_out, "Also write the family's order");
    };
    int n_urn = 8;
    bool extras = false;
    auto* gnim = gen->add_subcommand("nim", "Urn game: take one or two balls, the last taker loses");
    gnim->add_option("--n", n_urn, "Number of balls")->required();
    gnim->add_flag("--extras,--fig1-extras", extras, "Add the three extra B-edges of the 8-ball example");
    outputs(gnim);
    int dims = 2, bound = 3;
    bool no_bad = false;
    auto* gvec = gen->add_subcommand("vector", "Monotone counter game");
    gvec->add_option("--dims", dims)->required();
    gvec->add_option("--bound", bound)->required();
    gvec->add_flag("--no-bad", no_bad, "Do not mark states at the bound as Bad");
    outputs(gvec);
    std::string side;
    auto* gcx = gen->add_subcommand("fig3", "Counterexamples for orders that are not tba-simulations");
    gcx->add_option("--side", side)->required()->check(CLI::IsMember({"left", "right"}));
    outputs(gcx);
    int vertices = 10;
    double density = 0.3, bad_fraction = 0.25;
    std::uint64_t seed = 1;
    auto* grnd = gen->add_subcommand("random", "Seeded random game");
    grnd->add_option("--vertices", vertices)->required();
    grnd->add_option("--density", density)->required();
    grnd->add_option("--seed", seed)->required();
    grnd->add_option("--bad-fraction", bad_fraction);
    outputs(grnd);
    std::string cnf;
    auto* gsat = gen->add_subcommand("sat", "Reduction game of a DIMACS CNF");
    gsat->add_option("--cnf", cnf)->required();
    outputs(gsat);

    // bench
    BenchConfig bc;
    auto* bench = app.add_subcommand("bench", "Compare plain and antichain OTFUR");
    bench->add_option("family", bc.family, "nim | vector")->required()->check(CLI::IsMember({"nim", "vector"}));
    bench->add_option("--n", bc.sizes, "Comma-separated sizes (balls, or bounds for vector)");
    bench->add_option("--dims", bc.dims, "Dimensions of vector instances (default 2)");
    bench->add_option("--waiting", bc.waiting, "fifo | lifo (default lifo)")->check(CLI::IsMember({"fifo", "lifo"}));
    bench->add_flag("--no-extras", bc.no_extras, "Urn games without the extra B-edges");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kYes;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }

    Run run;
    json argv_json = json::array();
    for (int i = 1; i < argc; ++i) argv_json.push_back(argv[i]);
    run.report["argv"] = argv_json;
    int code = kError;
    try {
        if (*solve) {
            run.report["command"] = "solve";
            code = cmd_solve(sc, run);
        } else if (*vtba) {
            run.report["command"] = "verify tba-sim";
            code = cmd_verify_tba(v_game, v_order, run);
        } else if (*vstr) {
            run.report["command"] = "verify strategy";
            code = cmd_verify_strategy(v_game, v_strat, v_mode, v_order, run);
        } else if (*minsize) {
            run.report["command"] = "minsize";
            code = cmd_minsize(m_game, m_k, m_budget, m_witness, run);
        } else if (*gnim) {
            run.report["command"] = "gen nim";
            code = emit_fixture(gen_nim(NimSpec(n_urn, extras)), go, run);
        } else if (*gvec) {
            run.report["command"] = "gen vector";
            code = emit_fixture(gen_vector(VectorGameSpec::standard(dims, bound, !no_bad)), go, run);
        } else if (*gcx) {
            run.report["command"] = "gen fig3";
            code = emit_fixture(side == "left" ? gen_fig3_left() : gen_fig3_right(), go, run);
        } else if (*grnd) {
            run.report["command"] = "gen random";
            RandomSpec spec(vertices, density, seed);
            spec.bad_fraction = bad_fraction;
            Fixture f;
            f.game = std::make_unique<ExplicitGame>(gen_random(spec));
            code = emit_fixture(f, go, run);
        } else if (*gsat) {
            run.report["command"] = "gen sat";
            auto red = reduce_sat(load_dimacs(cnf));
            std::cout << "k " << red.k << '\n';
            run.report["k"] = red.k;
            Fixture f;
            f.game = std::make_unique<ExplicitGame>(red.game);
            code = emit_fixture(f, go, run);
        } else if (*bench) {
            run.report["command"] = "bench";
            code = cmd_bench(bc, run);
        }
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        run.report["error"] = e.what();
        code = kError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        run.report["error"] = e.what();
        code = kError;
    }

    run.report["exit_code"] = code;
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "error: cannot write report '" << report_path << "'\n";
            return kError;
        }
        out << run.report.dump(2) << '\n';
    }
    return code;
}

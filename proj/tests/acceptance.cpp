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
 * Acceptance suite: one line per criterion, PASS or FAIL, followed by a short
 * detail. Exits non-zero if any criterion fails.
 */

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "safegame/antichain.hpp"
#include "safegame/gamegen.hpp"
#include "safegame/minsize.hpp"
#include "safegame/simulation.hpp"
#include "safegame/solvers.hpp"
#include "safegame/strategy.hpp"

using namespace sg;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Collects failures; the first few are kept for the report line.
class Tally {
public:
    void expect(bool ok, const std::string& what)
    {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) msgs_.push_back(what);
    }
    Outcome outcome(const std::string& summary) const
    {
        if (failures_ == 0) return {true, summary};
        std::string d = std::to_string(failures_) + "/" + std::to_string(checks_) + " checks failed";
        for (const auto& m : msgs_) d += "; " + m;
        return {false, d};
    }

private:
    std::size_t checks_ = 0, failures_ = 0;
    std::vector<std::string> msgs_;
};

std::set<std::string> names(const Game& g, const std::vector<VertexId>& ids)
{
    std::set<std::string> out;
    for (VertexId v : ids) out.emplace(g.name(v));
    return out;
}

std::string show(const std::set<std::string>& s)
{
    std::string out = "{";
    for (const auto& x : s) out += (out.size() > 1 ? "," : "") + x;
    return out + "}";
}

std::map<std::string, std::string> entries(const Game& g, const StarStrategy& s)
{
    std::map<std::string, std::string> out;
    for (auto [v, w] : s.entries()) out.emplace(g.name(v), g.name(w));
    return out;
}

StarStrategy from_names(const ExplicitGame& g, const std::map<std::string, std::string>& m)
{
    StarStrategy s;
    for (const auto& [v, w] : m) s.set(g.at(v), g.at(w));
    return s;
}

const std::map<std::string, std::string> kTotal = {
    {"A0", "B1"}, {"A2", "B4"}, {"A3", "B4"}, {"A4", "B5"}, {"A5", "B7"}, {"A6", "B7"}, {"A7", "B8"}};

RandomSpec random_spec(int seed)
{
    return RandomSpec(2 + seed % 11, 0.2 + 0.1 * (seed % 5), static_cast<std::uint64_t>(seed));
}

std::vector<Fixture> vector_family()
{
    std::vector<Fixture> out;
    for (int dims = 1; dims <= 3; ++dims)
        for (int bound = 1; bound <= 3; ++bound)
            for (bool bad : {true, false}) out.push_back(gen_vector(VectorGameSpec::standard(dims, bound, bad)));
    return out;
}

std::string label(const Fixture& f) { return f.game->game_name(); }

// --- criteria ------------------------------------------------------------------

Outcome winning_set()
{
    auto f = gen_nim(NimSpec(8));
    auto r = solve_attractor(*f.game);
    auto win = names(*f.game, r.win.to_vector());
    std::set<std::string> expected{"A0", "A2", "A3", "A5", "A6", "B1", "B4", "B7"};
    if (win != expected) return {false, "Win = " + show(win)};
    return {true, "Win = " + show(win)};
}

Outcome antichains()
{
    auto f = gen_nim(NimSpec(8));
    const auto& g = *f.game;
    auto win = solve_attractor(g).win;
    auto gs = restrict_by_strategy(g, from_names(g, kTotal));
    std::vector<VertexId> reached;
    for (VertexId v : reach(gs, gs.initial()).to_vector())
        if (g.owner(v) == Player::A && win.contains(v)) reached.push_back(v);
    auto support = names(g, max_antichain(reached, *f.order).elements());
    auto max_win = names(g, max_antichain(win.to_vector(), *f.order).elements());
    bool ok = support == std::set<std::string>{"A5", "A6"} &&
              max_win == std::set<std::string>{"A5", "A6", "B7"};
    return {ok, "reachable winning A-antichain " + show(support) + ", MaxWin " + show(max_win)};
}

Outcome succinct_strategy()
{
    auto f = gen_nim(NimSpec(8));
    const auto& g = *f.game;
    auto r = solve_otfur_antichain(g, *f.order);
    if (r.winner != Winner::AWins || !r.strategy) return {false, "solver reports A loses"};
    auto got = entries(g, *r.strategy);
    bool table = got == std::map<std::string, std::string>{{"A5", "B7"}, {"A6", "B7"}};
    bool order_win = is_order_winning_star(g, *r.strategy, *f.order);
    bool plain_win = is_winning_star(g, *r.strategy);
    std::string d = "support size " + std::to_string(got.size()) +
                    ", order-winning " + (order_win ? "yes" : "no") +
                    ", winning for all concretisations " + (plain_win ? "yes" : "no");
    return {table && order_win && !plain_win, d};
}

Outcome min_sizes()
{
    auto nim = gen_nim(NimSpec(8));
    auto r1 = min_star_strategy_size(*nim.game, 5'000'000);
    auto phi = load_dimacs(std::string(SAFEGAME_TEST_DATA) + "/sat_example.cnf");
    auto red = reduce_sat(phi);
    auto r2 = min_star_strategy_size(red.game, 5'000'000);
    bool ok = r1.status == MinSizeStatus::Found && r1.size == 5 && r2.status == MinSizeStatus::Found &&
              r2.size == 8 && red.k == 8 && is_winning_star(*nim.game, r1.witness) &&
              is_winning_star(red.game, r2.witness);
    return {ok, "urn game " + std::to_string(r1.size) + ", reduction game " + std::to_string(r2.size) +
                    " with k = " + std::to_string(red.k)};
}

using Clause = std::vector<int>;
using Formula = std::vector<Clause>;

Formula canonical(const Formula& phi, int m)
{
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 1);
    Formula best;
    bool first = true;
    do {
        for (int flips = 0; flips < (1 << m); ++flips) {
            Formula img;
            for (const auto& c : phi) {
                Clause d;
                for (int lit : c) {
                    int var = std::abs(lit);
                    int sign = (lit > 0) != bool(flips & (1 << (var - 1))) ? 1 : -1;
                    d.push_back(sign * perm[var - 1]);
                }
                std::sort(d.begin(), d.end());
                img.push_back(d);
            }
            std::sort(img.begin(), img.end());
            if (first || img < best) best = img;
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool truth_table(int m, const Formula& phi)
{
    for (int bits = 0; bits < (1 << m); ++bits) {
        bool all = true;
        for (const auto& c : phi) {
            bool any = false;
            for (int lit : c) any = any || ((lit > 0) == bool(bits & (1 << (std::abs(lit) - 1))));
            all = all && any;
        }
        if (all) return true;
    }
    return false;
}

Outcome sat_sweep()
{
    Tally t;
    std::size_t formulas = 0, sat = 0;
    for (int m = 1; m <= 3; ++m) {
        std::vector<Clause> clauses;
        for (int code = 1; code < 27; ++code) {  // base-3 digit per variable: absent, +, -
            Clause c;
            int x = code;
            for (int v = 1; v <= 3; ++v, x /= 3) {
                if (x % 3 == 0) continue;
                if (v > m) {
                    c.clear();
                    break;
                }
                c.push_back(x % 3 == 1 ? v : -v);
            }
            if (!c.empty()) clauses.push_back(c);
        }
        std::set<Formula> seen;
        std::size_t n = clauses.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j <= n; ++j)
                for (std::size_t k = j; k <= n; ++k) {
                    Formula phi{clauses[i]};
                    if (j > i && j < n) phi.push_back(clauses[j]);
                    if (k > j && k < n) phi.push_back(clauses[k]);
                    if ((j == i && k != i) || (j == n && k != n)) continue;  // visit each set once
                    auto key = canonical(phi, m);
                    if (!seen.insert(key).second) continue;
                    ++formulas;
                    CnfFormula cnf{m, key};
                    auto red = reduce_sat(cnf);
                    bool expected = truth_table(m, key);
                    sat += expected;
                    auto d = decide_minsizestrat(red.game, red.k, 5'000'000);
                    std::ostringstream what;
                    what << "m=" << m << " clauses=" << key.size() << " truth-table " << expected;
                    t.expect(d != Decision::BudgetExhausted && (d == Decision::Yes) == expected, what.str());
                }
    }
    return t.outcome(std::to_string(formulas) + " canonical formulas (" + std::to_string(sat) +
                     " satisfiable), 100% agreement");
}

Outcome oracle_agreement()
{
    Tally t;
    EqualityOrder eq;
    for (int seed = 0; seed < 500; ++seed) {
        auto g = gen_random(random_spec(seed));
        bool attr = solve_attractor(g).win.contains(g.initial());
        bool plain = solve_otfur(g).winner == Winner::AWins;
        bool ac = solve_otfur_antichain(g, eq).winner == Winner::AWins;
        t.expect(attr == plain && plain == ac, "seed " + std::to_string(seed));
    }
    return t.outcome("500/500 random games agree");
}

Outcome downward_closure()
{
    Tally t;
    std::vector<Fixture> fx;
    for (int n = 5; n <= 20; ++n) {
        fx.push_back(gen_nim(NimSpec(n, false)));
        fx.push_back(gen_nim(NimSpec(n, true)));
    }
    auto vec = vector_family();
    for (auto& v : vec) fx.push_back(std::move(v));
    std::size_t pairs = 0;
    for (const auto& f : fx) {
        const auto& g = *f.game;
        auto r = solve_attractor(g, true);
        for (VertexId v1 = 0; v1 < g.size(); ++v1)
            for (VertexId v2 = 0; v2 < g.size(); ++v2) {
                if (v1 == v2 || !f.order->geq(v1, v2)) continue;
                ++pairs;
                t.expect(!(r.win.contains(v1) && !r.win.contains(v2)),
                         label(f) + ": " + std::string(g.name(v1)) + " wins, " + std::string(g.name(v2)) + " loses");
                for (std::size_t i = 0; i < r.per_round.size(); ++i)
                    t.expect(!(r.per_round[i].contains(v2) && !r.per_round[i].contains(v1)),
                             label(f) + ": round " + std::to_string(i));
            }
    }
    return t.outcome(std::to_string(fx.size()) + " games, " + std::to_string(pairs) +
                     " strict pairs, no violation of Win or per-round closure");
}

Outcome counterexamples()
{
    auto left = gen_fig3_left();
    const auto& lg = *left.game;
    bool left_sim = check_simulation(*left.order, lg).empty();
    auto win = solve_attractor(lg).win;
    bool left_broken = false;
    for (VertexId a = 0; a < lg.size(); ++a)
        for (VertexId b = 0; b < lg.size(); ++b)
            left_broken = left_broken || (left.order->geq(a, b) && win.contains(a) && !win.contains(b));

    auto right = gen_fig3_right();
    const auto& rg = *right.game;
    bool ac_wins = solve_otfur_antichain(rg, *right.order).winner == Winner::AWins;
    bool plain_loses = solve_otfur(rg).winner == Winner::ALoses;
    auto tba = check_tba_simulation(*right.order, rg);
    std::string d = std::string("left: simulation ") + (left_sim ? "yes" : "no") + ", Win downward closed " +
                    (left_broken ? "no" : "yes") + "; right: antichain solver says " + (ac_wins ? "A" : "B") +
                    ", plain solver says " + (plain_loses ? "B" : "A") + ", tba check " +
                    (tba.empty() ? "accepts" : "rejects (" + tba[0].message + ")");
    return {left_sim && left_broken && ac_wins && plain_loses && !tba.empty(), d};
}

Outcome invariants()
{
    Tally t;
    std::size_t runs = 0;
    auto run = [&](const Game& g, const PartialOrder& o, WaitingOrder w, const std::string& what) {
        OtfurOptions opts;
        opts.check_invariants = true;
        opts.waiting = w;
        ++runs;
        try {
            solve_otfur_antichain(g, o, opts);
            t.expect(true, what);
        } catch (const Error& e) {
            t.expect(false, what + ": " + e.what());
        }
    };
    EqualityOrder eq;
    auto nim = gen_nim(NimSpec(8));
    auto red = reduce_sat(load_dimacs(std::string(SAFEGAME_TEST_DATA) + "/sat_example.cnf"));
    for (auto w : {WaitingOrder::Fifo, WaitingOrder::Lifo}) {
        run(*nim.game, *nim.order, w, "urn game");
        run(red.game, eq, w, "reduction game");
        for (int i = 0; i < 50; ++i) {
            int seed = 1000 + 37 * i;
            run(gen_random(random_spec(seed)), eq, w, "random seed " + std::to_string(seed));
        }
    }
    return t.outcome(std::to_string(runs) + " runs probed at every loop head, zero violations");
}

Outcome pruning()
{
    std::string d;
    bool ok = true;
    for (int n : {50, 100, 200}) {
        auto f = gen_nim(NimSpec(n, true));
        OtfurOptions lifo;
        lifo.waiting = WaitingOrder::Lifo;
        auto plain = solve_otfur(*f.game, lifo);
        auto ac = solve_otfur_antichain(*f.game, *f.order, lifo);
        auto fifo_plain = solve_otfur(*f.game);
        auto fifo_ac = solve_otfur_antichain(*f.game, *f.order);
        ok = ok && ac.winner == plain.winner && ac.stats.vertices_explored < plain.stats.vertices_explored;
        d += (d.empty() ? "" : "; ") + std::string("N=") + std::to_string(n) + " lifo " +
             std::to_string(ac.stats.vertices_explored) + " < " + std::to_string(plain.stats.vertices_explored) +
             " (fifo " + std::to_string(fifo_ac.stats.vertices_explored) + " vs " +
             std::to_string(fifo_plain.stats.vertices_explored) + ")";
    }
    return {ok, d};
}

Outcome labeling_criterion()
{
    Tally t;
    auto fx = vector_family();
    std::size_t mutated_games = 0;
    for (auto& f : fx) {
        auto& g = *f.game;
        auto d = derive_tba(*f.order, g, *f.labeling);
        t.expect(d.by_criterion, label(f) + ": criterion fails at " + d.failed_check);
        t.expect(check_tba_simulation(*f.order, g).empty(), label(f) + ": direct tba check fails");

        // relabel an A-edge of a dominated vertex to another A-move of the game
        std::set<std::string> a_labels;
        for (VertexId v = 0; v < g.size(); ++v)
            if (g.owner(v) == Player::A)
                for (EdgeIndex e : g.out_edges(v)) a_labels.insert(f.labeling->label_name(e));
        bool mutated = false;
        for (VertexId v1 = 0; v1 < g.size() && !mutated; ++v1)
            for (VertexId v2 = 0; v2 < g.size() && !mutated; ++v2) {
                if (v1 == v2 || g.owner(v2) != Player::A || !f.order->geq(v1, v2)) continue;
                if (g.out_edges(v2).empty()) continue;
                auto lab = *f.labeling;
                EdgeIndex e = g.out_edges(v2).front();
                for (const auto& other : a_labels)
                    if (other != lab.label_name(e)) {
                        lab.relabel(e, other);
                        mutated = true;
                        break;
                    }
                if (mutated) t.expect(!check_monotonic_labeling(*f.order, g, lab).empty(),
                                      label(f) + ": mutation not detected");
            }
        // games whose strict pairs are all between B-vertices admit no mutation
        mutated_games += mutated;
    }
    t.expect(mutated_games > 0, "no game admits a mutation");
    return t.outcome(std::to_string(fx.size()) + " vector games pass both checks; " +
                     std::to_string(mutated_games) + " with a dominated A-vertex, every mutation detected");
}

} // namespace

int main()
{
    struct Criterion {
        const char* title;
        std::function<Outcome()> run;
    };
    const std::array<Criterion, 11> criteria{{
        {"urn game winning set", winning_set},
        {"antichains of the urn game", antichains},
        {"succinct order-winning strategy", succinct_strategy},
        {"minimum strategy sizes", min_sizes},
        {"SAT reduction equivalence sweep", sat_sweep},
        {"solver agreement on random games", oracle_agreement},
        {"downward-closed winning regions", downward_closure},
        {"simulation counterexamples", counterexamples},
        {"loop invariants", invariants},
        {"antichain pruning", pruning},
        {"labeling criterion for tba-simulations", labeling_criterion},
    }};

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].title
                  << " -- " << o.detail << " [" << static_cast<int>(secs * 1000) << " ms]\n";
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

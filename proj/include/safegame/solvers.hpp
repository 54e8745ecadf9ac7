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

#pragma once

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "safegame/antichain.hpp"
#include "safegame/arena.hpp"
#include "safegame/order.hpp"
#include "safegame/strategy.hpp"

namespace sg {

// --- Attractor ---------------------------------------------------------------

struct AttractorResult {
    VertexSet attractor;  // vertices from which B forces a visit to Bad
    VertexSet win;        // complement of the attractor
    std::size_t rounds = 0;
    /// per_round[i] = Attr_i, filled only on request.
    std::vector<VertexSet> per_round;
};

/// Layered backward fixpoint from Bad. Needs an explicit game.
AttractorResult solve_attractor(const Game& g, bool keep_rounds = false);

// --- Forward solvers ----------------------------------------------------------

enum class Winner { AWins, ALoses };

inline const char* to_string(Winner w) { return w == Winner::AWins ? "A" : "B"; }

enum class WaitingOrder { Fifo, Lifo };

struct OtfurOptions {
    WaitingOrder waiting = WaitingOrder::Fifo;
    /// Run invariant_probe at every loop head and throw on the first violation.
    bool check_invariants = false;
    /// 0 means |E|*(|V|+1)+1 on explicit games and unbounded otherwise.
    std::size_t max_iterations = 0;
};

struct SolveStats {
    std::size_t vertices_explored = 0;
    std::size_t edges_popped = 0;
    std::size_t reevaluations = 0;
    std::size_t postponements = 0;
};

struct SolveResult {
    Winner winner = Winner::ALoses;
    /// Present iff A wins.
    std::optional<StarStrategy> strategy;
    std::vector<VertexId> anti_maybe;
    std::vector<VertexId> anti_losing;
    SolveStats stats;
};

/**
 * On-the-fly forward exploration with backward propagation of losing
 * information. On a win the strategy picks, at every explored non-losing
 * A-vertex, its first non-losing successor.
 */
SolveResult solve_otfur(const Game& g, const OtfurOptions& opts = {});

struct Edge {
    VertexId src;
    VertexId dst;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Mutable state of the antichain solver, exposed for invariant probing.
struct OtfurState {
    OtfurState(const PartialOrder& o)
        : anti_maybe(Antichain::Mode::Max, o), anti_losing(Antichain::Mode::Min, o) {}

    VertexSet passed;
    std::vector<VertexId> passed_order;  // insertion order of `passed`
    std::deque<Edge> waiting;
    std::map<VertexId, std::vector<Edge>> depend;
    Antichain anti_maybe;   // maximal possibly-winning vertices
    Antichain anti_losing;  // minimal surely-losing vertices
    /// Every vertex that ever occurred in `waiting`; kept when checking invariants.
    VertexSet visited;
    bool track_visited = false;
};

/**
 * The antichain-pruned OTFUR for games equipped with a turn-based
 * alternating simulation. The order is trusted: with an order that is only
 * a simulation the answer can be wrong (see gen_fig3_right).
 */
class AntichainOtfur {
public:
    AntichainOtfur(const Game& g, const PartialOrder& o, OtfurOptions opts = {});

    bool done() const;
    /// One iteration of the main loop. Precondition: !done().
    void step();
    SolveResult run();

    /// Extracts the result; valid once done().
    SolveResult result() const;

    const OtfurState& state() const { return st_; }
    OtfurState& state_for_testing() { return st_; }
    std::size_t iteration() const { return iter_; }
    const SolveStats& stats() const { return stats_; }

private:
    void push(Edge e);
    void push_extremal_successors(VertexId v);
    Edge pop();
    std::vector<VertexId> extremal_successors(VertexId v) const;
    void add_depend(VertexId key, Edge e);
    void recompute_anti_maybe();
    bool dead_end_a(VertexId v) const;
    void probe() const;

    const Game* g_;
    const PartialOrder* o_;
    OtfurOptions opts_;
    OtfurState st_;
    SolveStats stats_;
    std::size_t iter_ = 0;
    std::size_t cap_ = 0;
    std::optional<VertexSet> losing_;  // attractor, cached for the losing-sound probe
};

SolveResult solve_otfur_antichain(const Game& g, const PartialOrder& o,
                                  const OtfurOptions& opts = {});

/**
 * Loop invariants of the antichain solver, by violation kind:
 *   coverage      every visited vertex is waiting, possibly winning or losing
 *   a-successor   a possibly-winning A-vertex keeps a possibly-winning or
 *                 pending successor
 *   b-successors  every successor of a possibly-winning B-vertex is possibly
 *                 winning or pending
 *   losing-sound  AntiLosing holds losing vertices only (needs `losing`, the
 *                 true losing set; skipped when null)
 *   depend-key    Depend[k] only holds edges whose target is below k or whose
 *                 source is strictly below k
 *
 * With literal = true, the first three are checked exactly as usually stated.
 * The default form reads "pending edge" up to the order (an edge (u, u')
 * with u >= v and u' >= v' also counts) and, for coverage, also accepts vertices
 * occurring in a postponed edge or reached only through a losing vertex,
 * whose edges the solver drops without exploring them.
 */
Violations invariant_probe(const OtfurState& st, const Game& g, const PartialOrder& o,
                           const VertexSet* losing, bool literal = false);

} // namespace sg

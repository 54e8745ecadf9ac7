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

#include <algorithm>
#include <string>

#include "safegame/solvers.hpp"

namespace sg {

AntichainOtfur::AntichainOtfur(const Game& g, const PartialOrder& o, OtfurOptions opts)
    : g_(&g), o_(&o), opts_(opts), st_(o)
{
    st_.track_visited = opts_.check_invariants;
    if (opts_.max_iterations) {
        cap_ = opts_.max_iterations;
    } else if (const auto* e = g.as_explicit()) {
        cap_ = e->num_edges() * (e->size() + 1) + 1;
    }
    if (opts_.check_invariants && g.as_explicit()) losing_ = solve_attractor(g).attractor;

    const VertexId init = g.initial();
    st_.passed.insert(init);
    st_.passed_order.push_back(init);
    st_.depend[init];
    stats_.vertices_explored = 1;
    if (g.is_bad(init) || dead_end_a(init)) {
        st_.anti_losing.insert(init);
        return;
    }
    st_.anti_maybe.insert(init);
    push_extremal_successors(init);
}

bool AntichainOtfur::dead_end_a(VertexId v) const
{
    return g_->owner(v) == Player::A && g_->successors(v).empty();
}

bool AntichainOtfur::done() const
{
    return st_.waiting.empty() || st_.anti_losing.in_up_closure(g_->initial());
}

void AntichainOtfur::push(Edge e)
{
    st_.waiting.push_back(e);
    if (st_.track_visited) {
        st_.visited.insert(e.src);
        st_.visited.insert(e.dst);
    }
}

Edge AntichainOtfur::pop()
{
    Edge e;
    if (opts_.waiting == WaitingOrder::Fifo) {
        e = st_.waiting.front();
        st_.waiting.pop_front();
    } else {
        e = st_.waiting.back();
        st_.waiting.pop_back();
    }
    return e;
}

// Minimal successors of an A-vertex, maximal ones of a B-vertex, in successor order.
std::vector<VertexId> AntichainOtfur::extremal_successors(VertexId v) const
{
    const auto& succ = g_->successors(v);
    const bool a = g_->owner(v) == Player::A;
    std::vector<VertexId> out;
    for (VertexId x : succ) {
        bool extremal = true;
        for (VertexId y : succ)
            if (y != x && (a ? o_->geq(x, y) : o_->geq(y, x))) extremal = false;
        if (extremal) out.push_back(x);
    }
    return out;
}

void AntichainOtfur::push_extremal_successors(VertexId v)
{
    for (VertexId x : extremal_successors(v)) push({v, x});
}

void AntichainOtfur::add_depend(VertexId key, Edge e)
{
    st_.depend[key].push_back(e);
}

void AntichainOtfur::recompute_anti_maybe()
{
    st_.anti_maybe.clear();
    for (VertexId v : st_.passed_order)
        if (!st_.anti_losing.in_up_closure(v)) st_.anti_maybe.insert(v);
}

void AntichainOtfur::probe() const
{
    auto violations = invariant_probe(st_, *g_, *o_, losing_ ? &*losing_ : nullptr);
    if (!violations.empty())
        throw Error(ErrorKind::InvariantViolation,
                    "iteration " + std::to_string(iter_) + ": " + violations.front().kind + ": " +
                        violations.front().message);
}

void AntichainOtfur::step()
{
    if (opts_.check_invariants) probe();
    if (cap_ && iter_ >= cap_)
        throw Error(ErrorKind::Resource, "antichain otfur exceeded its iteration cap");
    ++iter_;

    auto& am = st_.anti_maybe;
    auto& al = st_.anti_losing;
    const Edge e = pop();
    ++stats_.edges_popped;
    const auto [v, w] = e;

    if (al.in_up_closure(v)) return;

    // v is dominated by a possibly-winning vertex: postpone
    if (am.in_down_closure(v) && !am.contains(v)) {
        add_depend(*am.first_cover(v), e);
        ++stats_.postponements;
        return;
    }
    if (am.in_down_closure(w)) {
        if (am.contains(w)) {
            // Keep the edge so that v is reevaluated should w turn out losing.
            add_depend(w, e);
        } else {
            add_depend(*am.first_cover(w), e);
            ++stats_.postponements;
        }
        return;
    }
    if (!st_.passed.contains(w)) {
        st_.passed.insert(w);
        st_.passed_order.push_back(w);
        ++stats_.vertices_explored;
        if (al.in_up_closure(w)) {
            push(e);
        } else if (g_->is_bad(w) || dead_end_a(w)) {
            al.insert(w);
            push(e);
        } else {
            st_.depend[w] = {e};
            am.insert(w);
            push_extremal_successors(w);
        }
        return;
    }

    ++stats_.reevaluations;
    const auto ext = extremal_successors(v);
    bool losing;
    if (g_->owner(v) == Player::A)
        losing = std::all_of(ext.begin(), ext.end(), [&](VertexId x) { return al.in_up_closure(x); });
    else
        losing = std::any_of(ext.begin(), ext.end(), [&](VertexId x) { return al.in_up_closure(x); });
    if (losing) {
        al.insert(v);
        recompute_anti_maybe();
        for (Edge d : st_.depend[v]) push(d);
    } else if (!al.in_up_closure(w)) {
        add_depend(w, e);
    }
}

SolveResult AntichainOtfur::run()
{
    while (!done()) step();
    if (opts_.check_invariants) probe();
    return result();
}

SolveResult AntichainOtfur::result() const
{
    SolveResult res;
    res.stats = stats_;
    res.anti_maybe = st_.anti_maybe.elements();
    res.anti_losing = st_.anti_losing.elements();
    if (st_.anti_losing.in_up_closure(g_->initial())) {
        res.winner = Winner::ALoses;
        return res;
    }
    res.winner = Winner::AWins;
    StarStrategy s;
    for (VertexId v : st_.anti_maybe.elements()) {
        if (g_->owner(v) != Player::A) continue;
        bool found = false;
        for (VertexId x : g_->successors(v)) {
            if (st_.anti_maybe.in_down_closure(x)) {
                s.set(v, x);
                found = true;
                break;
            }
        }
        if (!found)
            throw Error(ErrorKind::InvariantViolation,
                        "no successor of " + std::string(g_->name(v)) +
                            " is possibly winning; is the order a tba-simulation?");
    }
    res.strategy = std::move(s);
    return res;
}

SolveResult solve_otfur_antichain(const Game& g, const PartialOrder& o, const OtfurOptions& opts)
{
    AntichainOtfur solver(g, o, opts);
    return solver.run();
}

// --- Invariant probe ----------------------------------------------------------

Violations invariant_probe(const OtfurState& st, const Game& g, const PartialOrder& o,
                           const VertexSet* losing, bool literal)
{
    Violations out;
    const auto& am = st.anti_maybe;
    const auto& al = st.anti_losing;
    auto nm = [&](VertexId v) { return std::string(g.name(v)); };

    if (!am.is_antichain()) out.push_back({"antichain", "AntiMaybe has comparable elements"});
    if (!al.is_antichain()) out.push_back({"antichain", "AntiLosing has comparable elements"});

    VertexSet in_waiting;
    for (Edge e : st.waiting) {
        in_waiting.insert(e.src);
        in_waiting.insert(e.dst);
    }
    std::vector<Edge> pending(st.waiting.begin(), st.waiting.end());
    VertexSet in_postponed;
    for (const auto& [key, edges] : st.depend) {
        if (!am.in_down_closure(key)) continue;
        for (Edge e : edges) {
            pending.push_back(e);
            in_postponed.insert(e.src);
            in_postponed.insert(e.dst);
        }
    }
    auto is_pending = [&](VertexId v, VertexId w) {
        for (Edge e : pending) {
            if (literal ? (e.src == v && e.dst == w) : (o.geq(e.src, v) && o.geq(e.dst, w)))
                return true;
        }
        return false;
    };

    // coverage. Edges leaving a losing vertex are dropped unexplored, so their
    // targets may leave Waiting without being classified; the default form
    // accounts for them.
    if (st.track_visited) {
        VertexSet behind_losing;
        if (!literal) {
            for (VertexId u : st.passed_order)
                if (al.in_up_closure(u))
                    for (VertexId w : g.successors(u)) behind_losing.insert(w);
        }
        for (VertexId v : st.visited.to_vector()) {
            if (in_waiting.contains(v) || am.in_down_closure(v) || al.in_up_closure(v)) continue;
            if (!literal && (in_postponed.contains(v) || behind_losing.contains(v))) continue;
            out.push_back({"coverage", "visited vertex " + nm(v) +
                                       " is neither waiting, possibly winning nor losing"});
        }
    }

    // a-successor / b-successors over every vertex known so far
    const auto n = static_cast<VertexId>(g.known_vertices());
    for (VertexId v = 0; v < n; ++v) {
        if (!am.in_down_closure(v)) continue;
        const auto succ = g.successors(v);  // copy: implicit games may grow
        if (g.owner(v) == Player::A) {
            bool ok = false;
            for (VertexId w : succ) ok = ok || am.in_down_closure(w) || is_pending(v, w);
            if (!ok)
                out.push_back({"a-successor", "A-vertex " + nm(v) +
                                           " has no possibly winning or pending successor"});
        } else {
            for (VertexId w : succ) {
                if (am.in_down_closure(w) || is_pending(v, w)) continue;
                out.push_back({"b-successors", "successor " + nm(w) + " of B-vertex " + nm(v) +
                                           " is neither possibly winning nor pending"});
            }
        }
    }

    // losing-sound
    if (losing) {
        for (VertexId v : al.elements())
            if (!losing->contains(v))
                out.push_back({"losing-sound", "vertex " + nm(v) + " is in AntiLosing but winning"});
    }

    // depend-key
    for (const auto& [key, edges] : st.depend) {
        for (Edge e : edges) {
            if (o.geq(key, e.dst) || (o.geq(key, e.src) && key != e.src)) continue;
            out.push_back({"depend-key", "Depend[" + nm(key) + "] holds edge " + nm(e.src) + " -> " +
                                       nm(e.dst)});
        }
    }
    return out;
}

} // namespace sg

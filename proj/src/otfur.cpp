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

#include <deque>
#include <string>
#include <unordered_map>

#include "safegame/solvers.hpp"

namespace sg {

namespace {

std::size_t default_cap(const Game& g, std::size_t requested)
{
    if (requested) return requested;
    if (const auto* e = g.as_explicit()) return e->num_edges() * (e->size() + 1) + 1;
    return 0;
}

} // namespace

SolveResult solve_otfur(const Game& g, const OtfurOptions& opts)
{
    SolveResult res;
    const VertexId init = g.initial();
    const std::size_t cap = default_cap(g, opts.max_iterations);

    VertexSet passed, losing;
    std::vector<VertexId> passed_order;
    std::unordered_map<VertexId, std::vector<Edge>> depend;
    std::deque<Edge> waiting;

    auto push = [&](Edge e) { waiting.push_back(e); };
    auto pop = [&] {
        Edge e;
        if (opts.waiting == WaitingOrder::Fifo) {
            e = waiting.front();
            waiting.pop_front();
        } else {
            e = waiting.back();
            waiting.pop_back();
        }
        return e;
    };
    // A dead end is as bad as Bad for A.
    auto lost_on_arrival = [&](VertexId v) {
        return g.is_bad(v) || (g.owner(v) == Player::A && g.successors(v).empty());
    };

    passed.insert(init);
    passed_order.push_back(init);
    if (lost_on_arrival(init)) losing.insert(init);
    for (VertexId w : g.successors(init)) push({init, w});

    while (!waiting.empty() && !losing.contains(init)) {
        if (cap && res.stats.edges_popped >= cap)
            throw Error(ErrorKind::Resource, "otfur exceeded its iteration cap");
        Edge e = pop();
        ++res.stats.edges_popped;
        auto [v, w] = e;
        if (!passed.contains(w)) {
            passed.insert(w);
            passed_order.push_back(w);
            depend[w] = {e};
            if (lost_on_arrival(w)) {
                losing.insert(w);
                push(e);  // reevaluate v
            } else {
                for (VertexId x : g.successors(w)) push({w, x});
            }
        } else {
            ++res.stats.reevaluations;
            bool now_losing;
            const auto& succ = g.successors(v);
            if (g.owner(v) == Player::A) {
                now_losing = true;
                for (VertexId x : succ) now_losing = now_losing && losing.contains(x);
            } else {
                now_losing = false;
                for (VertexId x : succ) now_losing = now_losing || losing.contains(x);
            }
            // Only a fresh verdict propagates; re-propagating would loop on cycles.
            if (now_losing && losing.insert(v)) {
                for (Edge d : depend[v]) push(d);
            }
            if (!losing.contains(w)) depend[w].push_back(e);
        }
    }

    res.stats.vertices_explored = passed.size();
    res.winner = losing.contains(init) ? Winner::ALoses : Winner::AWins;
    if (res.winner == Winner::AWins) {
        StarStrategy s;
        for (VertexId v : passed_order) {
            if (g.owner(v) != Player::A || losing.contains(v)) continue;
            for (VertexId x : g.successors(v)) {
                if (passed.contains(x) && !losing.contains(x)) {
                    s.set(v, x);
                    break;
                }
            }
        }
        res.strategy = std::move(s);
    }
    for (VertexId v : passed_order)
        if (losing.contains(v)) res.anti_losing.push_back(v);
    return res;
}

} // namespace sg

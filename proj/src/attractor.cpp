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

#include "safegame/solvers.hpp"

namespace sg {

AttractorResult solve_attractor(const Game& game, bool keep_rounds)
{
    const auto& g = require_explicit(game, "solve_attractor");
    const auto pred = g.predecessors();
    const auto n = static_cast<VertexId>(g.size());

    AttractorResult res;
    std::vector<std::size_t> open(n);  // A-vertices: successors not yet attracted
    std::vector<VertexId> layer;
    for (VertexId v = 0; v < n; ++v) {
        open[v] = g.successors(v).size();
        if (g.is_bad(v)) {
            res.attractor.insert(v);
            layer.push_back(v);
        }
    }
    if (keep_rounds) res.per_round.push_back(res.attractor);

    // A-vertices without moves lose at once: Succ(v) = {} is inside Attr_0
    std::vector<VertexId> next;
    for (VertexId v = 0; v < n; ++v)
        if (!res.attractor.contains(v) && g.owner(v) == Player::A && open[v] == 0)
            next.push_back(v);

    VertexSet queued;
    for (VertexId v : next) queued.insert(v);
    while (!layer.empty() || !next.empty()) {
        for (VertexId w : layer) {
            for (VertexId p : pred[w]) {
                if (res.attractor.contains(p) || queued.contains(p)) continue;
                if (g.owner(p) == Player::B || --open[p] == 0) {
                    queued.insert(p);
                    next.push_back(p);
                }
            }
        }
        if (next.empty()) break;
        for (VertexId v : next) res.attractor.insert(v);
        ++res.rounds;
        if (keep_rounds) res.per_round.push_back(res.attractor);
        layer.swap(next);
        next.clear();
    }
    for (VertexId v = 0; v < n; ++v)
        if (!res.attractor.contains(v)) res.win.insert(v);
    return res;
}

} // namespace sg

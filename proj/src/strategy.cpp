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

#include "safegame/strategy.hpp"

#include <deque>
#include <string>

#include "safegame/antichain.hpp"

namespace sg {

namespace {

std::string edge_str(const Game& g, VertexId v, VertexId w)
{
    return std::string(g.name(v)) + " -> " + std::string(g.name(w));
}

bool is_successor(const Game& g, VertexId v, VertexId w)
{
    for (VertexId x : g.successors(v))
        if (x == w) return true;
    return false;
}

/*
 * Forward search from I where `allowed(v, out)` fills the moves considered
 * at A-vertex v. Returns false as soon as a Bad vertex or an A-vertex
 * without moves is reached; `on_visit` sees every reached vertex.
 */
template <class Allowed, class Visit>
bool safe_reach(const Game& g, Allowed&& allowed, Visit&& on_visit)
{
    VertexSet seen;
    std::deque<VertexId> queue{g.initial()};
    seen.insert(g.initial());
    std::vector<VertexId> moves;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        on_visit(v);
        if (g.is_bad(v)) return false;
        const std::vector<VertexId>* next = &g.successors(v);
        if (g.owner(v) == Player::A) {
            if (next->empty()) return false;
            moves.clear();
            if (!allowed(v, moves)) continue;
            next = &moves;
        }
        for (VertexId w : *next)
            if (seen.insert(w)) queue.push_back(w);
    }
    return true;
}

} // namespace

std::vector<VertexId> StarStrategy::support() const
{
    std::vector<VertexId> out;
    out.reserve(map_.size());
    for (auto [v, w] : map_) out.push_back(v);
    return out;
}

void check_strategy_edges(const Game& g, const StarStrategy& s)
{
    for (auto [v, w] : s.entries()) {
        if (g.owner(v) != Player::A)
            throw Error(ErrorKind::InvalidStrategy,
                        "strategy maps B-vertex " + std::string(g.name(v)));
        if (!is_successor(g, v, w))
            throw Error(ErrorKind::InvalidStrategy, "strategy entry " + edge_str(g, v, w) +
                                                        " is not an edge");
    }
}

ExplicitGame restrict_by_strategy(const ExplicitGame& g, const StarStrategy& s)
{
    check_strategy_edges(g, s);
    ExplicitGame out(g.game_name());
    for (VertexId v = 0; v < g.size(); ++v)
        out.add_vertex(std::string(g.name(v)), g.owner(v), g.is_bad(v));
    for (const auto& e : g.edges()) {
        auto chosen = s.at(e.src);
        if (!chosen || *chosen == e.dst) out.add_edge(e.src, e.dst, e.label);
    }
    if (g.has_initial()) out.set_initial(g.initial());
    return out;
}

StarStrategy restrict(const StarStrategy& sigma, const std::vector<VertexId>& s)
{
    StarStrategy out;
    for (VertexId v : s)
        if (auto w = sigma.at(v)) out.set(v, *w);
    return out;
}

bool is_winning_total(const Game& g, const StarStrategy& sigma)
{
    check_strategy_edges(g, sigma);
    return safe_reach(
        g,
        [&](VertexId v, std::vector<VertexId>& out) {
            auto w = sigma.at(v);
            if (!w)
                throw Error(ErrorKind::IncompleteStrategy,
                            "no decision at reachable A-vertex " + std::string(g.name(v)));
            out.push_back(*w);
            return true;
        },
        [](VertexId) {});
}

bool is_winning_star(const Game& g, const StarStrategy& s)
{
    check_strategy_edges(g, s);
    return safe_reach(
        g,
        [&](VertexId v, std::vector<VertexId>& out) {
            if (auto w = s.at(v))
                out.push_back(*w);
            else
                out = g.successors(v);
            return true;
        },
        [](VertexId) {});
}

std::vector<VertexId> order_allowed_successors(const Game& g, const StarStrategy& s,
                                               const PartialOrder& o, VertexId v)
{
    if (auto w = s.at(v)) return {*w};
    const auto& succ = g.successors(v);
    bool dominated = false;
    std::vector<bool> keep(succ.size(), false);
    for (auto [u, w] : s.entries()) {
        if (!o.geq(u, v)) continue;
        dominated = true;
        for (std::size_t i = 0; i < succ.size(); ++i)
            if (!keep[i] && o.geq(w, succ[i])) keep[i] = true;
    }
    if (!dominated) return succ;
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < succ.size(); ++i)
        if (keep[i]) out.push_back(succ[i]);
    return out;
}

OrderWinningResult check_order_winning_star(const Game& g, const StarStrategy& s,
                                            const PartialOrder& o)
{
    check_strategy_edges(g, s);
    OrderWinningResult res;
    res.winning = safe_reach(
        g,
        [&](VertexId v, std::vector<VertexId>& out) {
            out = order_allowed_successors(g, s, o, v);
            if (out.empty()) {
                res.no_concretisation.push_back(v);
                return false;
            }
            return true;
        },
        [](VertexId) {});
    return res;
}

bool is_order_winning_star(const Game& g, const StarStrategy& s, const PartialOrder& o)
{
    return check_order_winning_star(g, s, o).verdict();
}

std::vector<StarStrategy> enumerate_order_concretisations(const ExplicitGame& g,
                                                          const StarStrategy& s,
                                                          const PartialOrder& o,
                                                          std::size_t limit)
{
    check_strategy_edges(g, s);
    std::vector<VertexId> verts;
    std::vector<std::vector<VertexId>> choices;
    std::size_t total = 1;
    for (VertexId v = 0; v < g.size(); ++v) {
        if (g.owner(v) != Player::A || g.successors(v).empty()) continue;
        auto allowed = order_allowed_successors(g, s, o, v);
        if (allowed.empty()) return {};
        if (total > limit / allowed.size())
            throw Error(ErrorKind::Resource, "more than " + std::to_string(limit) +
                                                 " concretisations");
        total *= allowed.size();
        verts.push_back(v);
        choices.push_back(std::move(allowed));
    }
    std::vector<StarStrategy> out;
    out.reserve(total);
    std::vector<std::size_t> idx(verts.size(), 0);
    for (;;) {
        StarStrategy c;
        for (std::size_t i = 0; i < verts.size(); ++i) c.set(verts[i], choices[i][idx[i]]);
        out.push_back(std::move(c));
        std::size_t i = 0;
        while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
        if (i == idx.size()) break;
    }
    return out;
}

SupportCheck check_support_hypotheses(const Game& g, const StarStrategy& sigma,
                                      const std::vector<VertexId>& s, const PartialOrder& o)
{
    auto below_s = [&](VertexId v) {
        for (VertexId u : s)
            if (o.geq(u, v)) return true;
        return false;
    };
    for (VertexId v : s) {
        auto w = sigma.at(v);
        if (!w)
            throw Error(ErrorKind::Precondition,
                        "vertex " + std::string(g.name(v)) + " is outside the strategy's domain");
        if (g.is_bad(v) || g.is_bad(*w)) return {false, 1};
    }
    if (!below_s(g.initial())) return {false, 2};
    for (VertexId v : s)
        for (VertexId w : g.successors(*sigma.at(v)))
            if (!below_s(w)) return {false, 3};
    return {true, 0};
}

StarStrategy antichain_support(const ExplicitGame& g, const StarStrategy& sigma,
                               const PartialOrder& o)
{
    if (!is_winning_total(g, sigma))
        throw Error(ErrorKind::Precondition, "strategy is not winning");
    std::vector<VertexId> reached_a;
    safe_reach(
        g,
        [&](VertexId v, std::vector<VertexId>& out) {
            out.push_back(*sigma.at(v));
            return true;
        },
        [&](VertexId v) {
            if (g.owner(v) == Player::A) reached_a.push_back(v);
        });
    return restrict(sigma, max_antichain(reached_a, o).elements());
}

StarStrategy strategy_from_region(const ExplicitGame& g, const VertexSet& win)
{
    StarStrategy s;
    for (VertexId v = 0; v < g.size(); ++v) {
        if (g.owner(v) != Player::A || !win.contains(v)) continue;
        for (VertexId w : g.successors(v)) {
            if (win.contains(w)) {
                s.set(v, w);
                break;
            }
        }
    }
    return s;
}

} // namespace sg

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
#include <map>
#include <optional>
#include <vector>

#include "safegame/arena.hpp"
#include "safegame/order.hpp"

namespace sg {

/**
 * Partial memoryless strategy for A. Vertices outside the support are "don't
 * care": any successor may be played there. A plain (total) strategy is just
 * a StarStrategy whose support covers every A-vertex that matters.
 */
class StarStrategy {
public:
    StarStrategy() = default;

    void set(VertexId v, VertexId succ) { map_[v] = succ; }
    void erase(VertexId v) { map_.erase(v); }

    std::optional<VertexId> at(VertexId v) const
    {
        auto it = map_.find(v);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    bool in_support(VertexId v) const { return map_.count(v) != 0; }
    std::size_t size() const { return map_.size(); }
    bool empty() const { return map_.empty(); }
    const std::map<VertexId, VertexId>& entries() const { return map_; }
    std::vector<VertexId> support() const;

    friend bool operator==(const StarStrategy&, const StarStrategy&) = default;

private:
    std::map<VertexId, VertexId> map_;
};

/// Throws InvalidStrategy unless every entry is an edge leaving an A-vertex.
void check_strategy_edges(const Game& g, const StarStrategy& s);

/**
 * G restricted by s: supported A-vertices keep only their chosen edge, every
 * other vertex keeps all of its edges.
 */
ExplicitGame restrict_by_strategy(const ExplicitGame& g, const StarStrategy& s);

/// sigma|_S.
StarStrategy restrict(const StarStrategy& sigma, const std::vector<VertexId>& s);

/**
 * A total strategy wins iff no Bad vertex is reachable from I in G_sigma.
 * Throws IncompleteStrategy if a reachable A-vertex has no decision.
 * Reaching an A-vertex without successors counts as a loss for A.
 */
bool is_winning_total(const Game& g, const StarStrategy& sigma);

/// Every concretisation of s is winning.
bool is_winning_star(const Game& g, const StarStrategy& s);

/**
 * Successors an order-concretisation of s may pick at the A-vertex v: the
 * chosen one on the support; below the support, the successors dominated by
 * the choice of some dominating support vertex; all successors elsewhere.
 */
std::vector<VertexId> order_allowed_successors(const Game& g, const StarStrategy& s,
                                               const PartialOrder& o, VertexId v);

struct OrderWinningResult {
    /// No Bad vertex (or stuck A-vertex) is reachable under the allowed moves.
    bool winning = false;
    /**
     * Reachable A-vertices that have successors but no allowed one. When
     * non-empty no order-concretisation exists and `winning` is vacuous.
     */
    std::vector<VertexId> no_concretisation;

    bool verdict() const { return winning && no_concretisation.empty(); }
};

OrderWinningResult check_order_winning_star(const Game& g, const StarStrategy& s,
                                            const PartialOrder& o);

/**
 * Shorthand for check_order_winning_star(...).verdict(): a strategy with no
 * order-concretisation at some reachable vertex is not considered winning.
 */
bool is_order_winning_star(const Game& g, const StarStrategy& s, const PartialOrder& o);

/**
 * All total strategies picking an allowed successor at every A-vertex.
 * Throws Resource when the product of the allowed-set sizes exceeds limit.
 */
std::vector<StarStrategy> enumerate_order_concretisations(const ExplicitGame& g,
                                                          const StarStrategy& s,
                                                          const PartialOrder& o,
                                                          std::size_t limit);

struct SupportCheck {
    bool ok = false;
    /// 0 when ok, otherwise the first failing hypothesis (1, 2 or 3).
    int failed_hypothesis = 0;
};

/**
 * Sufficient condition for sigma|_S to be order-winning:
 * (1) S and sigma(S) avoid Bad, (2) I is below S, (3) Succ(sigma(S)) is below S.
 */
SupportCheck check_support_hypotheses(const Game& g, const StarStrategy& sigma,
                                      const std::vector<VertexId>& s, const PartialOrder& o);

/**
 * sigma restricted to the maximal antichain of the A-vertices reachable under
 * sigma. Throws Precondition if sigma is not winning.
 */
StarStrategy antichain_support(const ExplicitGame& g, const StarStrategy& sigma,
                               const PartialOrder& o);

/// Winning strategy read off a winning region: first successor inside `win`.
StarStrategy strategy_from_region(const ExplicitGame& g, const VertexSet& win);

} // namespace sg

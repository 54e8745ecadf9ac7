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

#include <optional>
#include <string>
#include <vector>

#include "safegame/arena.hpp"
#include "safegame/order.hpp"

namespace sg {

/*
 * Checkers for order properties. They all need to enumerate vertex pairs and
 * therefore reject implicit games with a Capability error; the solver uses
 * check_tba_sample() on the states it explored instead.
 */

/// Reflexivity, antisymmetry, transitivity and the same-owner restriction.
Violations check_partial_order(const PartialOrder& o, const Game& g);

/**
 * Simulation compatible with Bad: for v1 >= v2, v1 not Bad, every move of v2
 * is matched by a dominating move of v1, and v2 Bad implies v1 Bad.
 */
Violations check_simulation(const PartialOrder& o, const Game& g);

/**
 * Turn-based alternating simulation: like check_simulation, except that at
 * A-pairs every move of the dominant vertex must dominate some move of the
 * dominated one.
 */
Violations check_tba_simulation(const PartialOrder& o, const Game& g);

/// The tba conditions restricted to pairs drawn from `vertices`.
Violations check_tba_sample(const PartialOrder& o, const Game& g,
                            const std::vector<VertexId>& vertices, std::size_t max_pairs);

struct ADeterminism {
    /// The common action set offered at every A-vertex, when one exists.
    std::optional<std::vector<std::string>> actions;
    Violations diagnostics;
};

/// Every A-vertex offers the same actions, each with exactly one successor.
ADeterminism check_a_deterministic(const ExplicitGame& g, const Labeling& lab);

/// v1 >= v2 implies every a-move of v2 is dominated by some a-move of v1.
Violations check_monotonic_labeling(const PartialOrder& o, const ExplicitGame& g,
                                    const Labeling& lab);

/**
 * Sufficient criterion for a tba-simulation: a simulation together with an
 * A-deterministic, order-monotonic labeling.
 */
struct TbaDerivation {
    bool by_criterion = false;
    /// Empty when by_criterion; else "simulation", "a-determinism" or "monotonic-labeling".
    std::string failed_check;
    Violations details;
};

TbaDerivation derive_tba(const PartialOrder& o, const ExplicitGame& g, const Labeling& lab);

} // namespace sg

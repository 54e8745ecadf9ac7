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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "safegame/arena.hpp"
#include "safegame/strategy.hpp"

namespace sg {

/// CNF over variables 1..num_vars; a literal is +i or -i.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
};

/// DIMACS reader: "p cnf m n" header, clauses terminated by 0, 'c' comments.
CnfFormula read_dimacs(std::istream& in);
CnfFormula load_dimacs(const std::string& path);
void write_dimacs(std::ostream& out, const CnfFormula& phi);

using Assignment = std::vector<bool>;  // index i-1 holds variable i

bool satisfies(const CnfFormula& phi, const Assignment& a);
/// Truth-table search; only meant for a handful of variables.
std::optional<Assignment> brute_force_sat(const CnfFormula& phi);

/**
 * The game built from a CNF formula: A must commit to a literal for every
 * variable and to a literal for every clause, and playing a clause literal
 * that was not chosen for its variable lets B steer to `bad`. A winning
 * don't-care strategy of size 2m+n exists iff the formula is satisfiable.
 *
 * Vertex names: initA, initB, bad, X<i>, x<i>A, nx<i>A, x<i>B, nx<i>B, C<j>.
 */
struct ReductionOutput {
    struct VarGadget {
        VertexId choose;  // X_i
        VertexId pos_a, neg_a, pos_b, neg_b;
    };

    ExplicitGame game;
    std::size_t k = 0;
    CnfFormula phi;
    VertexId init_a = kNoVertex, init_b = kNoVertex, bad = kNoVertex;
    std::vector<VarGadget> vars;
    std::vector<VertexId> clauses;
};

ReductionOutput reduce_sat(const CnfFormula& phi);

enum class MinSizeStatus { Found, NoWinningStrategy, BudgetExhausted };

struct MinSizeResult {
    MinSizeStatus status = MinSizeStatus::BudgetExhausted;
    std::size_t size = 0;
    StarStrategy witness;
    std::size_t nodes = 0;  // search nodes spent
};

/**
 * Smallest winning don't-care strategy, by iterative deepening on the size.
 * Each search node finds a shortest losing path in the restricted graph and
 * branches on the ways to cut it. `budget` caps the number of search nodes.
 * Needs an explicit game.
 */
MinSizeResult min_star_strategy_size(const Game& g, std::size_t budget);

enum class Decision { Yes, No, BudgetExhausted };

/// Is there a winning don't-care strategy of size at most k?
Decision decide_minsizestrat(const Game& g, std::size_t k, std::size_t budget);

/// Strategy of size exactly k read off a satisfying assignment.
StarStrategy strategy_from_assignment(const ReductionOutput& r, const Assignment& a);

/// x_i is true iff the strategy sends X_i to x_i^B. Needs a winning strategy of size <= k.
Assignment assignment_from_strategy(const ReductionOutput& r, const StarStrategy& s);

} // namespace sg

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

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "safegame/arena.hpp"
#include "safegame/on_the_fly.hpp"
#include "safegame/order.hpp"

namespace sg {

/**
 * A generated game with its order and (optional) labeling. The game lives on
 * the heap so the order's reference to it survives moves.
 */
struct Fixture {
    std::unique_ptr<ExplicitGame> game;
    std::unique_ptr<PartialOrder> order;
    std::optional<Labeling> labeling;
};

// --- Urn-filling Nim ------------------------------------------------------------

/*
 * Two players alternately add one or two balls to an urn holding N; A starts
 * on an empty urn. Vertex names are A<k> / B<k> with k the number of balls
 * in the urn. A-states have k in {0} u {2..N-1}, B-states k in {1..N}; Bad is
 * {A<N-1>, B<N>}. Edges are labeled by the change in the ball count.
 *
 * The three extra B-edges that go back down (B<N-1> -> A<N-2>, A<N-3> and
 * B<N-2> -> A<N-3>) are on by default for N = 8 only.
 */
struct NimSpec {
    NimSpec(int balls = 8, std::optional<bool> with_extras = std::nullopt)
        : n(balls), extras(with_extras) {}

    int n;
    std::optional<bool> extras;  // default: n == 8
};

/// Game, the mod-3 order and the "+1"/"+2" labeling. Throws DegenerateSpec for n < 3.
Fixture gen_nim(const NimSpec& spec);

/// The same game, generated on demand.
class NimModel {
public:
    struct State {
        Player owner;
        int balls;
        friend bool operator==(const State&, const State&) = default;
    };
    struct Hash {
        std::size_t operator()(const State& s) const
        {
            return std::hash<int>()(s.balls * 2 + (s.owner == Player::B));
        }
    };

    explicit NimModel(NimSpec spec);

    State initial_state() const { return {Player::A, 0}; }
    Player owner(const State& s) const { return s.owner; }
    bool bad(const State& s) const;
    void successors(const State& s, std::vector<State>& out) const;
    std::string name(const State& s) const;

private:
    int n_;
    bool extras_;
};

using NimGame = OnTheFlyGame<NimModel>;

// --- Monotone vector games ---------------------------------------------------------

/*
 * States are vectors over [0, bound]^dims plus the name of the move that led
 * there ("init" for the initial state); names look like "A:1,0:inc1". Every
 * state offers every move of its owner, so the move-name labeling is
 * A-deterministic, and monotone moves make the pointwise order (same owner,
 * same last move) a simulation that the labeling turns into a tba-simulation.
 */
struct VectorMove {
    std::string name;
    std::function<std::vector<int>(const std::vector<int>&)> apply;

    /// Adds delta coordinate-wise, saturating into [0, bound].
    static VectorMove saturating(std::string name, std::vector<int> delta, int bound);
};

struct VectorGameSpec {
    int dims = 2;
    int bound = 3;
    std::vector<VectorMove> a_moves;  // default: hold and dec<i>
    std::vector<VectorMove> b_moves;  // default: inc<i>
    bool bad_at_bound = true;         // Bad iff some coordinate equals bound

    /// Fills in the default move tables.
    static VectorGameSpec standard(int dims, int bound, bool bad_at_bound = true);
};

/// Throws Validation if a move leaves the box or is not monotone.
void validate_moves(const VectorGameSpec& spec);

class VectorModel {
public:
    struct State {
        Player owner;
        std::vector<int> coords;
        int move;  // index into the mover's table, -1 for the initial state
        friend bool operator==(const State&, const State&) = default;
    };
    struct Hash {
        std::size_t operator()(const State& s) const;
    };

    explicit VectorModel(VectorGameSpec spec);

    State initial_state() const;
    Player owner(const State& s) const { return s.owner; }
    bool bad(const State& s) const;
    void successors(const State& s, std::vector<State>& out) const;
    std::string name(const State& s) const;
    const std::string& move_name(const State& s) const;

private:
    VectorGameSpec spec_;
};

using VectorGame = OnTheFlyGame<VectorModel>;

/// Reachable part with the pointwise order and the move-name labeling.
Fixture gen_vector(const VectorGameSpec& spec);

// --- Counterexample fixtures ---------------------------------------------------------

/// A simulation whose winning region is not downward closed.
Fixture gen_fig3_left();
/// A simulation that is not a tba-simulation; misleads the antichain solver.
Fixture gen_fig3_right();

// --- Random games ---------------------------------------------------------------

struct RandomSpec {
    RandomSpec(int n = 10, double p = 0.3, std::uint64_t s = 1)
        : vertices(n), density(p), seed(s) {}

    int vertices;
    double density;
    std::uint64_t seed;
    double bad_fraction = 0.25;
    bool allow_deadends = false;
};

/**
 * Bipartite game with (n+1)/2 A-vertices a0.. and n/2 B-vertices b0..; each
 * possible edge is drawn with probability `density`, Bad is drawn among the
 * B-vertices. Initial vertex a0.
 */
ExplicitGame gen_random(const RandomSpec& spec);

} // namespace sg

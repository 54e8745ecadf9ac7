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

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "safegame/arena.hpp"

namespace sg {

enum class Cmp { Equal, Greater, Less, Incomparable };

/**
 * A partial order over the vertices of one game. geq(a, b) reads "a
 * dominates b". Only same-owner pairs are ever comparable.
 *
 * Orders reference the game they were built for; the game must outlive them.
 */
class PartialOrder {
public:
    virtual ~PartialOrder() = default;

    virtual bool geq(VertexId a, VertexId b) const = 0;
    virtual std::string kind() const = 0;

    Cmp compare(VertexId a, VertexId b) const
    {
        if (a == b) return Cmp::Equal;
        bool ab = geq(a, b);
        bool ba = geq(b, a);
        if (ab && ba) return Cmp::Equal;  // only reachable for broken orders
        if (ab) return Cmp::Greater;
        if (ba) return Cmp::Less;
        return Cmp::Incomparable;
    }

    bool strictly_greater(VertexId a, VertexId b) const { return a != b && geq(a, b); }
};

class EqualityOrder final : public PartialOrder {
public:
    bool geq(VertexId a, VertexId b) const override { return a == b; }
    std::string kind() const override { return "equality"; }
};

/**
 * The urn-filling Nim order: same owner, lambda(a) >= lambda(b) and equal
 * residues mod 3. Lambda is read from vertex names of the form A<k> / B<k>;
 * vertices with other names are only comparable to themselves.
 */
class NimOrder final : public PartialOrder {
public:
    explicit NimOrder(const Game& game) : game_(&game) {}
    bool geq(VertexId a, VertexId b) const override;
    std::string kind() const override { return "nim-mod3"; }

private:
    const Game* game_;
};

/**
 * Pointwise order on vector-game states: same owner, same last move, every
 * coordinate of a at least the one of b. Names have the form
 * "<A|B>:<c1>,<c2>,...:<move>".
 */
class VectorOrder final : public PartialOrder {
public:
    explicit VectorOrder(const Game& game) : game_(&game) {}
    bool geq(VertexId a, VertexId b) const override;
    std::string kind() const override { return "vector"; }

private:
    const Game* game_;
};

/// Explicit pair table over an explicit game, stored as a dense matrix.
class RelationOrder final : public PartialOrder {
public:
    /**
     * Reflexive-transitive closure of `pairs` (each meaning first >= second).
     * Throws Validation if the closure is not antisymmetric.
     */
    static RelationOrder closed(const ExplicitGame& g,
                                const std::vector<std::pair<VertexId, VertexId>>& pairs);

    /// The pairs exactly as given plus reflexivity, without any closure.
    static RelationOrder raw(const ExplicitGame& g,
                             const std::vector<std::pair<VertexId, VertexId>>& pairs);

    bool geq(VertexId a, VertexId b) const override
    {
        return a < n_ && b < n_ && bits_[static_cast<std::size_t>(a) * n_ + b];
    }
    std::string kind() const override { return "table"; }

    std::size_t size() const { return n_; }

private:
    explicit RelationOrder(std::size_t n) : n_(n), bits_(n * n, false) {}
    void set(VertexId a, VertexId b) { bits_[static_cast<std::size_t>(a) * n_ + b] = true; }

    std::size_t n_;
    std::vector<bool> bits_;
};

/**
 * Resolve a CLI order spec: "equality", "nim-mod3", "vector" or
 * "file:<path>" (the last one needs an explicit game).
 */
std::unique_ptr<PartialOrder> make_order(std::string_view spec, const Game& g);

/// All strictly comparable pairs (a, b) with a > b, for explicit games.
std::vector<std::pair<VertexId, VertexId>> strict_pairs(const PartialOrder& o,
                                                        const ExplicitGame& g);

} // namespace sg

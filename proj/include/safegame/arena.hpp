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
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "safegame/error.hpp"

namespace sg {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

enum class Player : std::uint8_t { A, B };

inline char to_char(Player p) { return p == Player::A ? 'A' : 'B'; }
inline Player opponent(Player p) { return p == Player::A ? Player::B : Player::A; }

/**
 * Dense set of vertex ids. Grows on insertion so it can be used while an
 * on-the-fly game is still discovering vertices.
 */
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t capacity) : bits_(capacity, false) {}

    bool contains(VertexId v) const { return v < bits_.size() && bits_[v]; }

    bool insert(VertexId v)
    {
        if (v >= bits_.size()) bits_.resize(static_cast<std::size_t>(v) + 1, false);
        if (bits_[v]) return false;
        bits_[v] = true;
        ++count_;
        return true;
    }

    bool erase(VertexId v)
    {
        if (!contains(v)) return false;
        bits_[v] = false;
        --count_;
        return true;
    }

    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    std::vector<VertexId> to_vector() const
    {
        std::vector<VertexId> out;
        out.reserve(count_);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i]) out.push_back(static_cast<VertexId>(i));
        return out;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b)
    {
        return a.to_vector() == b.to_vector();
    }

private:
    std::vector<bool> bits_;
    std::size_t count_ = 0;
};

class ExplicitGame;

/**
 * A finite turn-based safety game seen through its successor function.
 *
 * This is the only view the on-the-fly solvers need. Ids are dense and
 * stable for the lifetime of the object; on-the-fly implementations assign
 * them in discovery order. The successor list of a vertex is duplicate-free
 * and always returned in the same order.
 */
class Game {
public:
    virtual ~Game() = default;

    virtual VertexId initial() const = 0;
    virtual Player owner(VertexId v) const = 0;
    virtual bool is_bad(VertexId v) const = 0;
    virtual const std::vector<VertexId>& successors(VertexId v) const = 0;
    virtual std::string_view name(VertexId v) const = 0;

    /// Number of ids handed out so far. For explicit games this is |V|.
    virtual std::size_t known_vertices() const = 0;

    virtual const ExplicitGame* as_explicit() const { return nullptr; }
};

struct EdgeRecord {
    VertexId src;
    VertexId dst;
    std::string label;  // empty when unlabeled
};

/// A fully enumerated game, as loaded from a file or produced by a generator.
class ExplicitGame final : public Game {
public:
    explicit ExplicitGame(std::string name = "game") : name_(std::move(name)) {}

    VertexId add_vertex(std::string id, Player owner, bool bad = false);
    EdgeIndex add_edge(VertexId src, VertexId dst, std::string label = {});
    void set_initial(VertexId v);
    void set_bad(VertexId v, bool bad);

    const std::string& game_name() const { return name_; }
    void set_game_name(std::string name) { name_ = std::move(name); }

    std::optional<VertexId> find(std::string_view id) const;
    /// Like find() but throws InvalidVertex.
    VertexId at(std::string_view id) const;

    std::size_t size() const { return names_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<EdgeRecord>& edges() const { return edges_; }
    const std::vector<EdgeIndex>& out_edges(VertexId v) const;
    std::optional<EdgeIndex> edge_index(VertexId src, VertexId dst) const;
    bool has_initial() const { return initial_ != kNoVertex; }

    VertexId initial() const override;
    Player owner(VertexId v) const override;
    bool is_bad(VertexId v) const override;
    const std::vector<VertexId>& successors(VertexId v) const override;
    std::string_view name(VertexId v) const override;
    std::size_t known_vertices() const override { return names_.size(); }
    const ExplicitGame* as_explicit() const override { return this; }

    /// Predecessor lists, built on demand.
    std::vector<std::vector<VertexId>> predecessors() const;

    /// Replace the label of an existing edge.
    void relabel(EdgeIndex e, std::string label) { edges_.at(e).label = std::move(label); }

private:
    void check(VertexId v) const;

    std::string name_;
    std::vector<std::string> names_;
    std::vector<Player> owners_;
    std::vector<bool> bad_;
    std::vector<std::vector<VertexId>> succ_;
    std::vector<std::vector<EdgeIndex>> succ_edges_;
    std::vector<EdgeRecord> edges_;
    std::unordered_map<std::string, VertexId> index_;
    VertexId initial_ = kNoVertex;
};

/// Throws Capability unless g is explicit.
const ExplicitGame& require_explicit(const Game& g, std::string_view operation);

/**
 * Edge labeling lab: E -> Sigma of an explicit game. Symbols are interned
 * in first-use order over the edge list.
 */
class Labeling {
public:
    using Symbol = std::uint32_t;

    /// Builds the labeling from the game's edge labels; every edge must carry one.
    static Labeling from_game(const ExplicitGame& g);

    const std::vector<std::string>& alphabet() const { return alphabet_; }
    std::optional<Symbol> symbol(std::string_view name) const;
    Symbol label(EdgeIndex e) const { return labels_.at(e); }
    const std::string& label_name(EdgeIndex e) const { return alphabet_[labels_.at(e)]; }
    void relabel(EdgeIndex e, std::string_view name);

private:
    Symbol intern(std::string_view name);

    std::vector<std::string> alphabet_;
    std::vector<Symbol> labels_;
};

/// Reflexive-transitive closure of E from `from`.
VertexSet reach(const Game& g, VertexId from);

/**
 * Bounded reach for on-the-fly games: stops with a Resource error once more
 * than `max_vertices` vertices have been discovered.
 */
VertexSet reach(const Game& g, VertexId from, std::size_t max_vertices);

/// Succ^a(v): successors of v along edges labeled `a`.
std::vector<VertexId> succ_by_label(const ExplicitGame& g, const Labeling& lab, VertexId v,
                                    std::string_view a);

/// Structural checks: bipartite edges, A-owned initial vertex, unique ids.
Violations validate(const Game& g);

/// Enumerate the part of g reachable from its initial vertex.
ExplicitGame materialize(const Game& g, std::size_t max_vertices = 1u << 22);

} // namespace sg

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

#include "safegame/arena.hpp"

#include <deque>
#include <string>

namespace sg {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidVertex: return "invalid-vertex";
    case ErrorKind::Capability: return "capability";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::InvalidStrategy: return "invalid-strategy";
    case ErrorKind::IncompleteStrategy: return "incomplete-strategy";
    case ErrorKind::UnknownSymbol: return "unknown-symbol";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Resource: return "resource";
    case ErrorKind::InvariantViolation: return "invariant-violation";
    case ErrorKind::DegenerateSpec: return "degenerate-spec";
    case ErrorKind::Validation: return "validation";
    }
    return "unknown";
}

VertexId ExplicitGame::add_vertex(std::string id, Player owner, bool bad)
{
    if (id.empty()) throw Error(ErrorKind::Validation, "empty vertex id");
    for (char c : id)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
            throw Error(ErrorKind::Validation, "vertex id contains whitespace: '" + id + "'");
    if (index_.count(id)) throw Error(ErrorKind::Validation, "duplicate vertex id '" + id + "'");
    auto v = static_cast<VertexId>(names_.size());
    index_.emplace(id, v);
    names_.push_back(std::move(id));
    owners_.push_back(owner);
    bad_.push_back(bad);
    succ_.emplace_back();
    succ_edges_.emplace_back();
    return v;
}

EdgeIndex ExplicitGame::add_edge(VertexId src, VertexId dst, std::string label)
{
    check(src);
    check(dst);
    for (VertexId w : succ_[src])
        if (w == dst)
            throw Error(ErrorKind::Validation,
                        "duplicate edge " + names_[src] + " -> " + names_[dst]);
    auto e = static_cast<EdgeIndex>(edges_.size());
    edges_.push_back({src, dst, std::move(label)});
    succ_[src].push_back(dst);
    succ_edges_[src].push_back(e);
    return e;
}

void ExplicitGame::set_initial(VertexId v)
{
    check(v);
    initial_ = v;
}

void ExplicitGame::set_bad(VertexId v, bool bad)
{
    check(v);
    bad_[v] = bad;
}

std::optional<VertexId> ExplicitGame::find(std::string_view id) const
{
    auto it = index_.find(std::string(id));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexId ExplicitGame::at(std::string_view id) const
{
    if (auto v = find(id)) return *v;
    throw Error(ErrorKind::InvalidVertex, "unknown vertex '" + std::string(id) + "'");
}

const std::vector<EdgeIndex>& ExplicitGame::out_edges(VertexId v) const
{
    check(v);
    return succ_edges_[v];
}

std::optional<EdgeIndex> ExplicitGame::edge_index(VertexId src, VertexId dst) const
{
    check(src);
    const auto& s = succ_[src];
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == dst) return succ_edges_[src][i];
    return std::nullopt;
}

VertexId ExplicitGame::initial() const
{
    if (initial_ == kNoVertex) throw Error(ErrorKind::Validation, "game has no initial vertex");
    return initial_;
}

Player ExplicitGame::owner(VertexId v) const
{
    check(v);
    return owners_[v];
}

bool ExplicitGame::is_bad(VertexId v) const
{
    check(v);
    return bad_[v];
}

const std::vector<VertexId>& ExplicitGame::successors(VertexId v) const
{
    check(v);
    return succ_[v];
}

std::string_view ExplicitGame::name(VertexId v) const
{
    check(v);
    return names_[v];
}

std::vector<std::vector<VertexId>> ExplicitGame::predecessors() const
{
    std::vector<std::vector<VertexId>> pred(size());
    for (const auto& e : edges_) pred[e.dst].push_back(e.src);
    return pred;
}

void ExplicitGame::check(VertexId v) const
{
    if (v >= names_.size())
        throw Error(ErrorKind::InvalidVertex, "unknown vertex id " + std::to_string(v));
}

const ExplicitGame& require_explicit(const Game& g, std::string_view operation)
{
    if (const auto* e = g.as_explicit()) return *e;
    throw Error(ErrorKind::Capability,
                std::string(operation) + " requires an explicit game (implicit game given)");
}

// --- Labeling ---------------------------------------------------------------

Labeling Labeling::from_game(const ExplicitGame& g)
{
    Labeling lab;
    lab.labels_.reserve(g.num_edges());
    for (const auto& e : g.edges()) {
        if (e.label.empty())
            throw Error(ErrorKind::Validation, "edge " + std::string(g.name(e.src)) + " -> " +
                                                   std::string(g.name(e.dst)) + " has no label");
        lab.labels_.push_back(lab.intern(e.label));
    }
    return lab;
}

std::optional<Labeling::Symbol> Labeling::symbol(std::string_view name) const
{
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        if (alphabet_[i] == name) return static_cast<Symbol>(i);
    return std::nullopt;
}

void Labeling::relabel(EdgeIndex e, std::string_view name)
{
    labels_.at(e) = intern(name);
}

Labeling::Symbol Labeling::intern(std::string_view name)
{
    if (auto s = symbol(name)) return *s;
    alphabet_.emplace_back(name);
    return static_cast<Symbol>(alphabet_.size() - 1);
}

std::vector<VertexId> succ_by_label(const ExplicitGame& g, const Labeling& lab, VertexId v,
                                    std::string_view a)
{
    auto sym = lab.symbol(a);
    if (!sym) throw Error(ErrorKind::UnknownSymbol, "symbol '" + std::string(a) + "' not in alphabet");
    std::vector<VertexId> out;
    const auto& succ = g.successors(v);
    const auto& eids = g.out_edges(v);
    for (std::size_t i = 0; i < succ.size(); ++i)
        if (lab.label(eids[i]) == *sym) out.push_back(succ[i]);
    return out;
}

// --- Traversals --------------------------------------------------------------

namespace {

VertexSet bfs(const Game& g, VertexId from, std::size_t max_vertices)
{
    g.owner(from);  // validates the id
    VertexSet seen;
    std::deque<VertexId> queue{from};
    seen.insert(from);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : g.successors(v)) {
            if (seen.insert(w)) {
                if (seen.size() > max_vertices)
                    throw Error(ErrorKind::Resource,
                                "reach exceeded " + std::to_string(max_vertices) + " vertices");
                queue.push_back(w);
            }
        }
    }
    return seen;
}

} // namespace

VertexSet reach(const Game& g, VertexId from)
{
    const auto& e = require_explicit(g, "unbounded reach");
    return bfs(e, from, e.size());
}

VertexSet reach(const Game& g, VertexId from, std::size_t max_vertices)
{
    return bfs(g, from, max_vertices);
}

Violations validate(const Game& game)
{
    const auto& g = require_explicit(game, "validate");
    Violations out;
    if (!g.has_initial()) {
        out.push_back({"initial", "no initial vertex declared"});
    } else if (g.owner(g.initial()) != Player::A) {
        out.push_back({"initial-owner",
                       "initial vertex " + std::string(g.name(g.initial())) + " is owned by B"});
    }
    for (const auto& e : g.edges()) {
        if (g.owner(e.src) == g.owner(e.dst)) {
            out.push_back({"bipartite", "edge " + std::string(g.name(e.src)) + " -> " +
                                            std::string(g.name(e.dst)) + " joins two " +
                                            to_char(g.owner(e.src)) + "-vertices"});
        }
    }
    for (VertexId v = 0; v < g.size(); ++v) {
        auto found = g.find(g.name(v));
        if (!found || *found != v)
            out.push_back({"duplicate-id", "vertex id '" + std::string(g.name(v)) + "' is not unique"});
    }
    return out;
}

ExplicitGame materialize(const Game& g, std::size_t max_vertices)
{
    VertexSet seen = reach(g, g.initial(), max_vertices);
    ExplicitGame out;
    // on-the-fly ids are assigned in discovery order; keep that order
    std::vector<VertexId> order = seen.to_vector();
    std::vector<VertexId> remap(g.known_vertices(), kNoVertex);
    for (VertexId v : order)
        remap[v] = out.add_vertex(std::string(g.name(v)), g.owner(v), g.is_bad(v));
    for (VertexId v : order)
        for (VertexId w : g.successors(v)) out.add_edge(remap[v], remap[w]);
    out.set_initial(remap[g.initial()]);
    return out;
}

} // namespace sg

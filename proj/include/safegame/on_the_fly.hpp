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

#include <concepts>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "safegame/arena.hpp"

namespace sg {

// clang-format off
template <class M>
concept GameModel = requires(const M& m, const typename M::State& s,
                             std::vector<typename M::State>& out) {
    typename M::State;
    typename M::Hash;
    { m.initial_state() } -> std::convertible_to<typename M::State>;
    { m.owner(s) } -> std::same_as<Player>;
    { m.bad(s) } -> std::same_as<bool>;
    { m.successors(s, out) };
    { m.name(s) } -> std::convertible_to<std::string>;
};
// clang-format on

/**
 * Implicit game driven by a successor generator. States are interned to
 * dense ids the first time they are seen, so solvers only ever touch the
 * part of the arena they explore.
 *
 * Not thread-safe: successor queries mutate the intern table.
 */
template <GameModel Model>
class OnTheFlyGame final : public Game {
public:
    using State = typename Model::State;

    explicit OnTheFlyGame(Model model) : model_(std::move(model))
    {
        initial_ = intern(model_.initial_state());
    }

    const Model& model() const { return model_; }
    const State& state(VertexId v) const { return states_.at(v); }

    VertexId initial() const override { return initial_; }

    Player owner(VertexId v) const override { return owners_.at(v); }

    bool is_bad(VertexId v) const override { return bad_.at(v); }

    const std::vector<VertexId>& successors(VertexId v) const override
    {
        if (v >= states_.size())
            throw Error(ErrorKind::InvalidVertex, "unknown vertex id " + std::to_string(v));
        if (!succ_[v]) {
            scratch_.clear();
            model_.successors(states_[v], scratch_);
            std::vector<VertexId> ids;
            ids.reserve(scratch_.size());
            for (auto& s : scratch_) {
                VertexId id = intern(std::move(s));
                bool dup = false;
                for (VertexId x : ids) dup = dup || x == id;
                if (!dup) ids.push_back(id);
            }
            succ_[v] = std::move(ids);
        }
        return *succ_[v];
    }

    std::string_view name(VertexId v) const override { return names_.at(v); }

    std::size_t known_vertices() const override { return states_.size(); }

private:
    VertexId intern(State s) const
    {
        auto it = index_.find(s);
        if (it != index_.end()) return it->second;
        auto id = static_cast<VertexId>(states_.size());
        owners_.push_back(model_.owner(s));
        bad_.push_back(model_.bad(s));
        names_.push_back(model_.name(s));
        succ_.emplace_back();
        index_.emplace(s, id);
        states_.push_back(std::move(s));
        return id;
    }

    Model model_;
    VertexId initial_ = kNoVertex;
    mutable std::deque<State> states_;
    mutable std::vector<Player> owners_;
    mutable std::vector<bool> bad_;
    mutable std::deque<std::string> names_;
    // deques keep references handed out by successors()/name() valid
    mutable std::deque<std::optional<std::vector<VertexId>>> succ_;
    mutable std::unordered_map<State, VertexId, typename Model::Hash> index_;
    mutable std::vector<State> scratch_;
};

} // namespace sg

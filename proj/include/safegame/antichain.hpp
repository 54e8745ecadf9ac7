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
#include <span>
#include <vector>

#include "safegame/arena.hpp"
#include "safegame/order.hpp"

namespace sg {

/**
 * Set of pairwise incomparable vertices.
 *
 * A max antichain stands for its downward closure, a min antichain for its
 * upward closure. Elements are kept in a flat list in insertion order (with
 * removals); closure queries are linear scans.
 */
class Antichain {
public:
    enum class Mode { Max, Min };

    Antichain(Mode mode, const PartialOrder& order) : mode_(mode), order_(&order) {}

    Mode mode() const { return mode_; }
    const PartialOrder& order() const { return *order_; }
    const std::vector<VertexId>& elements() const { return elems_; }
    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    bool contains(VertexId v) const;

    /// Max mode: true iff some element m has m >= v.
    bool in_down_closure(VertexId v) const;
    /// Min mode: true iff some element m has v >= m.
    bool in_up_closure(VertexId v) const;
    /// Closure membership for the antichain's own mode.
    bool covers(VertexId v) const { return mode_ == Mode::Max ? in_down_closure(v) : in_up_closure(v); }

    /// First element (in iteration order) that covers v.
    std::optional<VertexId> first_cover(VertexId v) const;

    /**
     * Adds v unless it is already covered; drops every element v covers.
     * Returns true if the antichain changed.
     */
    bool insert(VertexId v);

    void clear() { elems_.clear(); }

    /// Pairwise incomparability, for debug checks.
    bool is_antichain() const;

    /// Same elements, ignoring order.
    bool same_elements(std::span<const VertexId> other) const;

private:
    bool dominates(VertexId a, VertexId b) const
    {
        return mode_ == Mode::Max ? order_->geq(a, b) : order_->geq(b, a);
    }

    Mode mode_;
    const PartialOrder* order_;
    std::vector<VertexId> elems_;
};

/// Unique maximal antichain of s.
Antichain max_antichain(std::span<const VertexId> s, const PartialOrder& o);
/// Unique minimal antichain of s.
Antichain min_antichain(std::span<const VertexId> s, const PartialOrder& o);

} // namespace sg

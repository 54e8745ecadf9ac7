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

#include "safegame/order.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "safegame/antichain.hpp"
#include "safegame/io.hpp"

namespace sg {

namespace {

struct NimKey {
    char owner;
    long lambda;
};

std::optional<NimKey> parse_nim(std::string_view name)
{
    if (name.size() < 2 || (name[0] != 'A' && name[0] != 'B')) return std::nullopt;
    long value = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), value);
    if (ec != std::errc() || ptr != name.data() + name.size()) return std::nullopt;
    return NimKey{name[0], value};
}

// "<A|B>:<c1>,...,<cd>:<move>"
struct VectorKey {
    char owner = 0;
    std::vector<long> coords;
    std::string_view move;
};

std::optional<VectorKey> parse_vector(std::string_view name)
{
    if (name.size() < 4 || (name[0] != 'A' && name[0] != 'B') || name[1] != ':')
        return std::nullopt;
    VectorKey key;
    key.owner = name[0];
    auto rest = name.substr(2);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    key.move = rest.substr(colon + 1);
    auto coords = rest.substr(0, colon);
    const char* p = coords.data();
    const char* end = coords.data() + coords.size();
    while (p < end) {
        long value = 0;
        auto [ptr, ec] = std::from_chars(p, end, value);
        if (ec != std::errc()) return std::nullopt;
        key.coords.push_back(value);
        p = ptr;
        if (p < end) {
            if (*p != ',') return std::nullopt;
            ++p;
        }
    }
    return key;
}

} // namespace

bool NimOrder::geq(VertexId a, VertexId b) const
{
    if (a == b) return true;
    auto ka = parse_nim(game_->name(a));
    auto kb = parse_nim(game_->name(b));
    if (!ka || !kb || ka->owner != kb->owner) return false;
    return ka->lambda >= kb->lambda && ka->lambda % 3 == kb->lambda % 3;
}

bool VectorOrder::geq(VertexId a, VertexId b) const
{
    if (a == b) return true;
    auto ka = parse_vector(game_->name(a));
    auto kb = parse_vector(game_->name(b));
    if (!ka || !kb || ka->owner != kb->owner || ka->move != kb->move ||
        ka->coords.size() != kb->coords.size())
        return false;
    for (std::size_t i = 0; i < ka->coords.size(); ++i)
        if (ka->coords[i] < kb->coords[i]) return false;
    return true;
}

RelationOrder RelationOrder::raw(const ExplicitGame& g,
                                 const std::vector<std::pair<VertexId, VertexId>>& pairs)
{
    RelationOrder o(g.size());
    for (VertexId v = 0; v < g.size(); ++v) o.set(v, v);
    for (auto [a, b] : pairs) {
        g.owner(a);
        g.owner(b);
        o.set(a, b);
    }
    return o;
}

RelationOrder RelationOrder::closed(const ExplicitGame& g,
                                    const std::vector<std::pair<VertexId, VertexId>>& pairs)
{
    RelationOrder o = raw(g, pairs);
    const std::size_t n = o.n_;
    // Warshall
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (o.bits_[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (o.bits_[k * n + j]) o.bits_[i * n + j] = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (o.bits_[i * n + j] && o.bits_[j * n + i])
                throw Error(ErrorKind::Validation,
                            "order is not antisymmetric: " + std::string(g.name(i)) + " and " +
                                std::string(g.name(j)) + " dominate each other");
    return o;
}

std::unique_ptr<PartialOrder> make_order(std::string_view spec, const Game& g)
{
    if (spec == "equality") return std::make_unique<EqualityOrder>();
    if (spec == "nim-mod3") return std::make_unique<NimOrder>(g);
    if (spec == "vector") return std::make_unique<VectorOrder>(g);
    if (spec.substr(0, 5) == "file:") {
        const auto& e = require_explicit(g, "order file");
        std::string path(spec.substr(5));
        std::ifstream in(path);
        if (!in) throw Error(ErrorKind::Parse, "cannot open order file '" + path + "'");
        return std::make_unique<RelationOrder>(read_order(in, e));
    }
    throw Error(ErrorKind::Parse, "unknown order '" + std::string(spec) +
                                      "' (expected equality, nim-mod3, vector or file:<path>)");
}

std::vector<std::pair<VertexId, VertexId>> strict_pairs(const PartialOrder& o,
                                                        const ExplicitGame& g)
{
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId a = 0; a < g.size(); ++a)
        for (VertexId b = 0; b < g.size(); ++b)
            if (a != b && o.geq(a, b)) out.emplace_back(a, b);
    return out;
}

// --- Antichain ---------------------------------------------------------------

bool Antichain::contains(VertexId v) const
{
    return std::find(elems_.begin(), elems_.end(), v) != elems_.end();
}

bool Antichain::in_down_closure(VertexId v) const
{
    if (mode_ != Mode::Max) throw Error(ErrorKind::Precondition, "in_down_closure on a min antichain");
    for (VertexId m : elems_)
        if (order_->geq(m, v)) return true;
    return false;
}

bool Antichain::in_up_closure(VertexId v) const
{
    if (mode_ != Mode::Min) throw Error(ErrorKind::Precondition, "in_up_closure on a max antichain");
    for (VertexId m : elems_)
        if (order_->geq(v, m)) return true;
    return false;
}

std::optional<VertexId> Antichain::first_cover(VertexId v) const
{
    for (VertexId m : elems_)
        if (dominates(m, v)) return m;
    return std::nullopt;
}

bool Antichain::insert(VertexId v)
{
    for (VertexId m : elems_)
        if (dominates(m, v)) return false;
    std::erase_if(elems_, [&](VertexId m) { return dominates(v, m); });
    elems_.push_back(v);
    return true;
}

bool Antichain::is_antichain() const
{
    for (std::size_t i = 0; i < elems_.size(); ++i)
        for (std::size_t j = 0; j < elems_.size(); ++j)
            if (i != j && order_->geq(elems_[i], elems_[j])) return false;
    return true;
}

bool Antichain::same_elements(std::span<const VertexId> other) const
{
    std::vector<VertexId> a(elems_.begin(), elems_.end());
    std::vector<VertexId> b(other.begin(), other.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

Antichain max_antichain(std::span<const VertexId> s, const PartialOrder& o)
{
    Antichain a(Antichain::Mode::Max, o);
    for (VertexId v : s) a.insert(v);
    return a;
}

Antichain min_antichain(std::span<const VertexId> s, const PartialOrder& o)
{
    Antichain a(Antichain::Mode::Min, o);
    for (VertexId v : s) a.insert(v);
    return a;
}

} // namespace sg

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

#include "safegame/simulation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sg {

namespace {

std::string nm(const Game& g, VertexId v) { return std::string(g.name(v)); }

std::string pair_str(const Game& g, VertexId a, VertexId b)
{
    return "(" + nm(g, a) + ", " + nm(g, b) + ")";
}

// some x in xs with o.geq(x, y)
bool dominated_by_any(const PartialOrder& o, const std::vector<VertexId>& xs, VertexId y)
{
    for (VertexId x : xs)
        if (o.geq(x, y)) return true;
    return false;
}

// some y in ys with o.geq(x, y)
bool dominates_any(const PartialOrder& o, VertexId x, const std::vector<VertexId>& ys)
{
    for (VertexId y : ys)
        if (o.geq(x, y)) return true;
    return false;
}

void bad_condition(const PartialOrder&, const Game& g, VertexId v1, VertexId v2, Violations& out)
{
    if (g.is_bad(v2) && !g.is_bad(v1))
        out.push_back({"bad", "pair " + pair_str(g, v1, v2) + ": dominated vertex is Bad, dominant is not"});
}

// B-style matching: every successor of v2 dominated by a successor of v1.
void forward_match(const PartialOrder& o, const Game& g, VertexId v1, VertexId v2,
                   Violations& out)
{
    const auto& s1 = g.successors(v1);
    for (VertexId w2 : g.successors(v2))
        if (!dominated_by_any(o, s1, w2))
            out.push_back({"match", "pair " + pair_str(g, v1, v2) + ": successor " + nm(g, w2) +
                                        " of " + nm(g, v2) + " is not dominated by any successor of " +
                                        nm(g, v1)});
}

// A-style matching: every successor of v1 dominates a successor of v2.
void backward_match(const PartialOrder& o, const Game& g, VertexId v1, VertexId v2,
                    Violations& out)
{
    const auto& s2 = g.successors(v2);
    for (VertexId w1 : g.successors(v1))
        if (!dominates_any(o, w1, s2))
            out.push_back({"match", "pair " + pair_str(g, v1, v2) + ": successor " + nm(g, w1) +
                                        " of " + nm(g, v1) + " dominates no successor of " +
                                        nm(g, v2)});
}

void tba_pair(const PartialOrder& o, const Game& g, VertexId v1, VertexId v2, Violations& out)
{
    if (g.is_bad(v1)) return;
    if (g.owner(v1) == Player::A)
        backward_match(o, g, v1, v2, out);
    else
        forward_match(o, g, v1, v2, out);
    bad_condition(o, g, v1, v2, out);
}

template <class F>
void for_strict_pairs(const PartialOrder& o, const ExplicitGame& g, F&& f)
{
    for (VertexId a = 0; a < g.size(); ++a)
        for (VertexId b = 0; b < g.size(); ++b)
            if (a != b && o.geq(a, b)) f(a, b);
}

} // namespace

Violations check_partial_order(const PartialOrder& o, const Game& game)
{
    const auto& g = require_explicit(game, "check_partial_order");
    Violations out;
    const VertexId n = static_cast<VertexId>(g.size());
    for (VertexId a = 0; a < n; ++a)
        if (!o.geq(a, a)) out.push_back({"reflexivity", nm(g, a) + " does not dominate itself"});
    std::vector<std::vector<VertexId>> above(n);
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = 0; b < n; ++b) {
            if (a == b || !o.geq(a, b)) continue;
            above[b].push_back(a);
            if (g.owner(a) != g.owner(b))
                out.push_back({"owner", "pair " + pair_str(g, a, b) + " mixes owners"});
            if (a < b && o.geq(b, a))
                out.push_back({"antisymmetry", nm(g, a) + " and " + nm(g, b) + " dominate each other"});
        }
    }
    // a >= b >= c must give a >= c
    for (VertexId b = 0; b < n; ++b)
        for (VertexId a : above[b])
            for (VertexId c = 0; c < n; ++c)
                if (c != b && o.geq(b, c) && !o.geq(a, c))
                    out.push_back({"transitivity", nm(g, a) + " >= " + nm(g, b) + " >= " + nm(g, c) +
                                                       " but not " + nm(g, a) + " >= " + nm(g, c)});
    return out;
}

Violations check_simulation(const PartialOrder& o, const Game& game)
{
    const auto& g = require_explicit(game, "check_simulation");
    Violations out;
    for_strict_pairs(o, g, [&](VertexId a, VertexId b) {
        if (g.is_bad(a)) return;
        forward_match(o, g, a, b, out);
        bad_condition(o, g, a, b, out);
    });
    return out;
}

Violations check_tba_simulation(const PartialOrder& o, const Game& game)
{
    const auto& g = require_explicit(game, "check_tba_simulation");
    Violations out;
    for_strict_pairs(o, g, [&](VertexId a, VertexId b) { tba_pair(o, g, a, b, out); });
    return out;
}

Violations check_tba_sample(const PartialOrder& o, const Game& g,
                            const std::vector<VertexId>& vertices, std::size_t max_pairs)
{
    Violations out;
    std::size_t checked = 0;
    for (VertexId a : vertices) {
        for (VertexId b : vertices) {
            if (a == b || !o.geq(a, b)) continue;
            if (checked++ == max_pairs) return out;
            tba_pair(o, g, a, b, out);
        }
    }
    return out;
}

ADeterminism check_a_deterministic(const ExplicitGame& g, const Labeling& lab)
{
    ADeterminism res;
    std::optional<std::vector<Labeling::Symbol>> common;
    for (VertexId v = 0; v < g.size(); ++v) {
        if (g.owner(v) != Player::A) continue;
        std::vector<Labeling::Symbol> syms;
        for (EdgeIndex e : g.out_edges(v)) syms.push_back(lab.label(e));
        std::sort(syms.begin(), syms.end());
        if (std::adjacent_find(syms.begin(), syms.end()) != syms.end()) {
            res.diagnostics.push_back({"a-determinism", "A-vertex " + nm(g, v) +
                                                            " has two successors with the same label"});
            syms.erase(std::unique(syms.begin(), syms.end()), syms.end());
        }
        if (!common) {
            common = syms;
        } else if (*common != syms) {
            res.diagnostics.push_back({"a-determinism", "A-vertex " + nm(g, v) +
                                                            " offers a different action set"});
        }
    }
    if (res.diagnostics.empty()) {
        std::vector<std::string> actions;
        if (common)
            for (auto s : *common) actions.push_back(lab.alphabet()[s]);
        std::sort(actions.begin(), actions.end());
        res.actions = std::move(actions);
    }
    return res;
}

Violations check_monotonic_labeling(const PartialOrder& o, const ExplicitGame& g,
                                    const Labeling& lab)
{
    Violations out;
    for_strict_pairs(o, g, [&](VertexId v1, VertexId v2) {
        const auto& e1 = g.out_edges(v1);
        for (EdgeIndex e2 : g.out_edges(v2)) {
            auto a = lab.label(e2);
            VertexId w2 = g.edges()[e2].dst;
            bool matched = false;
            for (EdgeIndex e : e1)
                if (lab.label(e) == a && o.geq(g.edges()[e].dst, w2)) matched = true;
            if (!matched)
                out.push_back({"monotonic", "pair " + pair_str(g, v1, v2) + ", label " +
                                                lab.alphabet()[a] + ": successor " + nm(g, w2) +
                                                " is not dominated by any same-label successor"});
        }
    });
    return out;
}

TbaDerivation derive_tba(const PartialOrder& o, const ExplicitGame& g, const Labeling& lab)
{
    TbaDerivation d;
    if (auto v = check_simulation(o, g); !v.empty()) {
        d.failed_check = "simulation";
        d.details = std::move(v);
        return d;
    }
    if (auto det = check_a_deterministic(g, lab); !det.actions) {
        d.failed_check = "a-determinism";
        d.details = std::move(det.diagnostics);
        return d;
    }
    if (auto v = check_monotonic_labeling(o, g, lab); !v.empty()) {
        d.failed_check = "monotonic-labeling";
        d.details = std::move(v);
        return d;
    }
    d.by_criterion = true;
    return d;
}

} // namespace sg

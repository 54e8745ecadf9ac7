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

/*
 * Reference implementations used as test oracles. They work on vertex names
 * and the raw edge list only, and follow the textbook definitions as
 * directly as possible, so they share no code with the library.
 */

#include <cstddef>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "safegame/arena.hpp"

namespace oracle {

using Names = std::set<std::string>;
using Geq = std::function<bool(const std::string&, const std::string&)>;

inline std::string name(const sg::ExplicitGame& g, sg::VertexId v) { return std::string(g.name(v)); }

inline bool is_a(const sg::ExplicitGame& g, const std::string& v) { return g.owner(g.at(v)) == sg::Player::A; }

inline Names all_vertices(const sg::ExplicitGame& g)
{
    Names out;
    for (sg::VertexId v = 0; v < g.size(); ++v) out.insert(name(g, v));
    return out;
}

/// Successors by scanning the stored edge list.
inline std::vector<std::string> succ_scan(const sg::ExplicitGame& g, const std::string& v)
{
    std::vector<std::string> out;
    for (const auto& e : g.edges())
        if (name(g, e.src) == v) out.push_back(name(g, e.dst));
    return out;
}

/// Reflexive-transitive closure of the edge list, with optional per-vertex move filter.
inline Names reach_scan(const sg::ExplicitGame& g, const std::string& from,
                        const std::map<std::string, std::string>& fixed = {})
{
    Names seen{from};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& e : g.edges()) {
            auto s = name(g, e.src), d = name(g, e.dst);
            if (!seen.count(s) || seen.count(d)) continue;
            auto it = fixed.find(s);
            if (it != fixed.end() && it->second != d) continue;
            seen.insert(d);
            grew = true;
        }
    }
    return seen;
}

/// Attr_0 = Bad, Attr_{i+1} = Attr_i + {B : some succ in Attr_i} + {A : all succ in Attr_i}.
inline std::vector<Names> attractor_rounds(const sg::ExplicitGame& g)
{
    Names cur;
    for (sg::VertexId v = 0; v < g.size(); ++v)
        if (g.is_bad(v)) cur.insert(name(g, v));
    std::vector<Names> rounds{cur};
    for (;;) {
        Names next = cur;
        for (sg::VertexId v = 0; v < g.size(); ++v) {
            auto n = name(g, v);
            auto succ = succ_scan(g, n);
            std::size_t in = 0;
            for (const auto& w : succ) in += cur.count(w);
            bool add = g.owner(v) == sg::Player::B ? in > 0 : in == succ.size();
            if (add) next.insert(n);
        }
        if (next == cur) return rounds;
        rounds.push_back(next);
        cur = next;
    }
}

inline Names win(const sg::ExplicitGame& g)
{
    Names attr = attractor_rounds(g).back();
    Names out;
    for (const auto& v : all_vertices(g))
        if (!attr.count(v)) out.insert(v);
    return out;
}

/// A total strategy wins iff no Bad vertex and no stuck A-vertex is reachable.
inline bool total_wins(const sg::ExplicitGame& g, const std::map<std::string, std::string>& sigma)
{
    for (const auto& v : reach_scan(g, name(g, g.initial()), sigma)) {
        if (g.is_bad(g.at(v))) return false;
        if (is_a(g, v) && succ_scan(g, v).empty()) return false;
    }
    return true;
}

/// Every concretisation of the partial map wins; brute force over all choices.
inline bool star_wins_by_enumeration(const sg::ExplicitGame& g,
                                     const std::map<std::string, std::string>& star)
{
    std::vector<std::string> free;
    for (const auto& v : all_vertices(g))
        if (is_a(g, v) && !star.count(v) && !succ_scan(g, v).empty()) free.push_back(v);
    std::map<std::string, std::string> sigma = star;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == free.size()) return total_wins(g, sigma);
        for (const auto& w : succ_scan(g, free[i])) {
            sigma[free[i]] = w;
            if (!rec(i + 1)) return false;
        }
        return true;
    };
    return rec(0);
}

inline Names max_antichain(const Names& s, const Geq& geq)
{
    Names out;
    for (const auto& x : s) {
        bool dominated = false;
        for (const auto& y : s)
            if (y != x && geq(y, x)) dominated = true;
        if (!dominated) out.insert(x);
    }
    return out;
}

inline Names min_antichain(const Names& s, const Geq& geq)
{
    return max_antichain(s, [&](const std::string& a, const std::string& b) { return geq(b, a); });
}

inline Names down_closure(const Names& s, const Names& universe, const Geq& geq)
{
    Names out;
    for (const auto& v : universe)
        for (const auto& m : s)
            if (geq(m, v)) out.insert(v);
    return out;
}

inline Names up_closure(const Names& s, const Names& universe, const Geq& geq)
{
    Names out;
    for (const auto& v : universe)
        for (const auto& m : s)
            if (geq(v, m)) out.insert(v);
    return out;
}

/// Truth-table satisfiability; literals are +i / -i over variables 1..m.
inline bool satisfiable(int m, const std::vector<std::vector<int>>& clauses)
{
    for (unsigned bits = 0; bits < (1u << m); ++bits) {
        bool all = true;
        for (const auto& c : clauses) {
            bool any = false;
            for (int lit : c) {
                bool val = (bits >> (std::abs(lit) - 1)) & 1u;
                if ((lit > 0) == val) any = true;
            }
            all = all && any;
        }
        if (all) return true;
    }
    return false;
}

/// The mod-3 order, straight from vertex names "A<k>" / "B<k>".
inline bool nim_geq(const std::string& a, const std::string& b)
{
    if (a[0] != b[0]) return false;
    int x = std::stoi(a.substr(1)), y = std::stoi(b.substr(1));
    return x >= y && x % 3 == y % 3;
}

} // namespace oracle

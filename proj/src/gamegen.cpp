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

#include "safegame/gamegen.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <unordered_map>

namespace sg {

// --- Nim ---------------------------------------------------------------------

NimModel::NimModel(NimSpec spec) : n_(spec.n), extras_(spec.extras.value_or(spec.n == 8))
{
    if (n_ < 3) throw Error(ErrorKind::DegenerateSpec, "nim needs at least 3 balls");
}

bool NimModel::bad(const State& s) const
{
    return s.owner == Player::A ? s.balls == n_ - 1 : s.balls == n_;
}

void NimModel::successors(const State& s, std::vector<State>& out) const
{
    auto a_state = [&](int k) { return k == 0 || (k >= 2 && k <= n_ - 1); };
    auto add = [&](State t) {
        for (const auto& x : out)
            if (x == t) return;
        out.push_back(t);
    };
    if (s.owner == Player::A) {
        for (int d = 1; d <= 2; ++d)
            if (s.balls + d <= n_) add({Player::B, s.balls + d});
        return;
    }
    for (int d = 1; d <= 2; ++d)
        if (a_state(s.balls + d)) add({Player::A, s.balls + d});
    if (!extras_) return;
    if (s.balls == n_ - 1) {
        if (a_state(n_ - 2)) add({Player::A, n_ - 2});
        if (a_state(n_ - 3)) add({Player::A, n_ - 3});
    } else if (s.balls == n_ - 2 && a_state(n_ - 3)) {
        add({Player::A, n_ - 3});
    }
}

std::string NimModel::name(const State& s) const
{
    return to_char(s.owner) + std::to_string(s.balls);
}

Fixture gen_nim(const NimSpec& spec)
{
    NimModel model(spec);
    auto g = std::make_unique<ExplicitGame>("nim" + std::to_string(spec.n));
    std::vector<NimModel::State> states;
    for (int k = 0; k <= spec.n; ++k) {
        if (k == 0 || (k >= 2 && k <= spec.n - 1)) states.push_back({Player::A, k});
        if (k >= 1) states.push_back({Player::B, k});
    }
    for (const auto& s : states) g->add_vertex(model.name(s), s.owner, model.bad(s));
    std::vector<NimModel::State> succ;
    for (const auto& s : states) {
        succ.clear();
        model.successors(s, succ);
        for (const auto& t : succ) {
            int delta = t.balls - s.balls;
            g->add_edge(g->at(model.name(s)), g->at(model.name(t)),
                        (delta > 0 ? "+" : "") + std::to_string(delta));
        }
    }
    g->set_initial(g->at("A0"));
    Fixture f;
    f.order = std::make_unique<NimOrder>(*g);
    f.labeling = Labeling::from_game(*g);
    f.game = std::move(g);
    return f;
}

// --- Vector games --------------------------------------------------------------

VectorMove VectorMove::saturating(std::string name, std::vector<int> delta, int bound)
{
    return {std::move(name), [delta = std::move(delta), bound](const std::vector<int>& v) {
                std::vector<int> out(v);
                for (std::size_t i = 0; i < out.size() && i < delta.size(); ++i)
                    out[i] = std::clamp(out[i] + delta[i], 0, bound);
                return out;
            }};
}

VectorGameSpec VectorGameSpec::standard(int dims, int bound, bool bad_at_bound)
{
    VectorGameSpec s;
    s.dims = dims;
    s.bound = bound;
    s.bad_at_bound = bad_at_bound;
    s.a_moves.push_back(VectorMove::saturating("hold", std::vector<int>(dims, 0), bound));
    for (int i = 0; i < dims; ++i) {
        std::vector<int> dec(dims, 0), inc(dims, 0);
        dec[i] = -1;
        inc[i] = 1;
        s.a_moves.push_back(VectorMove::saturating("dec" + std::to_string(i + 1), dec, bound));
        s.b_moves.push_back(VectorMove::saturating("inc" + std::to_string(i + 1), inc, bound));
    }
    return s;
}

void validate_moves(const VectorGameSpec& spec)
{
    if (spec.dims < 1 || spec.bound < 1)
        throw Error(ErrorKind::DegenerateSpec, "vector game needs dims >= 1 and bound >= 1");
    if (spec.a_moves.empty() || spec.b_moves.empty())
        throw Error(ErrorKind::DegenerateSpec, "both players need at least one move");
    double cells = 1;
    for (int i = 0; i < spec.dims; ++i) cells *= spec.bound + 1;
    if (cells > 1e6) throw Error(ErrorKind::Resource, "vector box too large to validate");

    auto in_box = [&](const std::vector<int>& v) {
        if (static_cast<int>(v.size()) != spec.dims) return false;
        for (int x : v)
            if (x < 0 || x > spec.bound) return false;
        return true;
    };
    auto geq = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] < b[i]) return false;
        return true;
    };
    auto check = [&](const VectorMove& m) {
        std::vector<int> v(spec.dims, 0);
        for (;;) {
            auto fv = m.apply(v);
            if (!in_box(fv)) throw Error(ErrorKind::Validation, "move " + m.name + " leaves the box");
            // monotone iff it is monotone along every covering step v -> v + e_i
            for (int i = 0; i < spec.dims; ++i) {
                if (v[i] == spec.bound) continue;
                auto up = v;
                ++up[i];
                if (!geq(m.apply(up), fv))
                    throw Error(ErrorKind::Validation, "move " + m.name + " is not monotone");
            }
            int i = 0;
            while (i < spec.dims && ++v[i] > spec.bound) v[i++] = 0;
            if (i == spec.dims) break;
        }
    };
    for (const auto& m : spec.a_moves) check(m);
    for (const auto& m : spec.b_moves) check(m);
}

std::size_t VectorModel::Hash::operator()(const State& s) const
{
    std::size_t h = std::hash<int>()(s.move) * 31 + (s.owner == Player::B);
    for (int x : s.coords) h = h * 1000003u + std::hash<int>()(x);
    return h;
}

VectorModel::VectorModel(VectorGameSpec spec) : spec_(std::move(spec)) {}

VectorModel::State VectorModel::initial_state() const
{
    return {Player::A, std::vector<int>(spec_.dims, 0), -1};
}

bool VectorModel::bad(const State& s) const
{
    if (!spec_.bad_at_bound) return false;
    for (int x : s.coords)
        if (x >= spec_.bound) return true;
    return false;
}

void VectorModel::successors(const State& s, std::vector<State>& out) const
{
    const auto& moves = s.owner == Player::A ? spec_.a_moves : spec_.b_moves;
    for (std::size_t i = 0; i < moves.size(); ++i)
        out.push_back({opponent(s.owner), moves[i].apply(s.coords), static_cast<int>(i)});
}

const std::string& VectorModel::move_name(const State& s) const
{
    static const std::string init = "init";
    if (s.move < 0) return init;
    // an A-state was reached by a B-move and vice versa
    const auto& moves = s.owner == Player::A ? spec_.b_moves : spec_.a_moves;
    return moves.at(s.move).name;
}

std::string VectorModel::name(const State& s) const
{
    std::string out(1, to_char(s.owner));
    out += ':';
    for (std::size_t i = 0; i < s.coords.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.coords[i]);
    }
    return out + ':' + move_name(s);
}

Fixture gen_vector(const VectorGameSpec& spec)
{
    validate_moves(spec);
    VectorModel model(spec);
    auto g = std::make_unique<ExplicitGame>("vector" + std::to_string(spec.dims) + "x" +
                                            std::to_string(spec.bound));
    std::unordered_map<VectorModel::State, VertexId, VectorModel::Hash> ids;
    std::deque<VectorModel::State> queue;
    auto intern = [&](const VectorModel::State& s) {
        auto it = ids.find(s);
        if (it != ids.end()) return it->second;
        VertexId v = g->add_vertex(model.name(s), s.owner, model.bad(s));
        ids.emplace(s, v);
        queue.push_back(s);
        return v;
    };
    g->set_initial(intern(model.initial_state()));
    std::vector<VectorModel::State> succ;
    while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        VertexId v = ids.at(s);
        succ.clear();
        model.successors(s, succ);
        for (const auto& t : succ) g->add_edge(v, intern(t), model.move_name(t));
    }
    Fixture f;
    f.order = std::make_unique<VectorOrder>(*g);
    f.labeling = Labeling::from_game(*g);
    f.game = std::move(g);
    return f;
}

// --- Counterexamples -----------------------------------------------------------

Fixture gen_fig3_left()
{
    auto g = std::make_unique<ExplicitGame>("fig3-left");
    VertexId v0 = g->add_vertex("v0", Player::A);
    VertexId v3 = g->add_vertex("v3", Player::B);
    VertexId v4 = g->add_vertex("v4", Player::B);
    VertexId v1 = g->add_vertex("v1", Player::A);
    VertexId v2 = g->add_vertex("v2", Player::A);
    VertexId v1pp = g->add_vertex("v1pp", Player::B);
    VertexId v1p = g->add_vertex("v1p", Player::B, true);
    VertexId v2p = g->add_vertex("v2p", Player::B, true);
    g->add_edge(v0, v3);
    g->add_edge(v0, v4);
    g->add_edge(v3, v1);
    g->add_edge(v4, v2);
    g->add_edge(v1, v1pp);
    g->add_edge(v1, v1p);
    g->add_edge(v2, v2p);
    g->set_initial(v0);
    Fixture f;
    f.order = std::make_unique<RelationOrder>(RelationOrder::closed(*g, {{v1, v2}, {v1p, v2p}}));
    f.game = std::move(g);
    return f;
}

Fixture gen_fig3_right()
{
    auto g = std::make_unique<ExplicitGame>("fig3-right");
    VertexId v = g->add_vertex("v", Player::A);
    VertexId vpp = g->add_vertex("vpp", Player::B);
    VertexId vp = g->add_vertex("vp", Player::A);
    VertexId b1 = g->add_vertex("b1", Player::B, true);
    VertexId b2 = g->add_vertex("b2", Player::B, true);
    g->add_edge(v, vpp);
    g->add_edge(v, b1);
    g->add_edge(vpp, vp);
    g->add_edge(vp, b2);
    g->set_initial(v);
    Fixture f;
    // b1 >= b2 makes the order a simulation (the move v' -> b2 is matched by v -> b1)
    f.order = std::make_unique<RelationOrder>(RelationOrder::closed(*g, {{v, vp}, {b1, b2}}));
    f.game = std::move(g);
    return f;
}

// --- Random ---------------------------------------------------------------------

ExplicitGame gen_random(const RandomSpec& spec)
{
    if (spec.vertices < 2) throw Error(ErrorKind::DegenerateSpec, "random game needs >= 2 vertices");
    std::mt19937_64 rng(spec.seed);
    // explicit mappings keep the stream identical across standard libraries
    auto coin = [&](double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; };
    auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    const int na = (spec.vertices + 1) / 2;
    const int nb = spec.vertices / 2;
    ExplicitGame g("random-" + std::to_string(spec.vertices) + "-" + std::to_string(spec.seed));
    std::vector<VertexId> as, bs;
    for (int i = 0; i < na; ++i) as.push_back(g.add_vertex("a" + std::to_string(i), Player::A));
    for (int i = 0; i < nb; ++i) {
        bool bad = coin(spec.bad_fraction);
        bs.push_back(g.add_vertex("b" + std::to_string(i), Player::B, bad));
    }
    auto connect = [&](const std::vector<VertexId>& from, const std::vector<VertexId>& to) {
        for (VertexId v : from) {
            bool any = false;
            for (VertexId w : to) {
                if (coin(spec.density)) {
                    g.add_edge(v, w);
                    any = true;
                }
            }
            if (!any && !spec.allow_deadends) g.add_edge(v, to[pick(to.size())]);
        }
    };
    connect(as, bs);
    connect(bs, as);
    g.set_initial(as.front());
    return g;
}

} // namespace sg

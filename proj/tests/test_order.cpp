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


#include "catch_amalgamated.hpp"

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "safegame/antichain.hpp"
#include "safegame/gamegen.hpp"
#include "safegame/order.hpp"
#include "safegame/simulation.hpp"
#include "test_util.hpp"

using namespace sg;
using testutil::ids;
using testutil::names;

namespace {

oracle::Geq geq_of(const Game& g, const PartialOrder& o)
{
    return [&g, &o](const std::string& a, const std::string& b) {
        const auto& e = *g.as_explicit();
        return o.geq(e.at(a), e.at(b));
    };
}

/// Random order: a random DAG over same-owner pairs, closed under transitivity.
RelationOrder random_order(const ExplicitGame& g, std::mt19937& rng)
{
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::bernoulli_distribution coin(0.3);
    for (VertexId a = 0; a < g.size(); ++a)
        for (VertexId b = 0; b < a; ++b)
            if (g.owner(a) == g.owner(b) && coin(rng)) pairs.emplace_back(a, b);
    return RelationOrder::closed(g, pairs);
}

} // namespace

TEST_CASE("mod-3 order", "[order]")
{
    auto f = gen_nim({8});
    const auto& g = *f.game;
    const auto& o = *f.order;
    for (VertexId a = 0; a < g.size(); ++a)
        for (VertexId b = 0; b < g.size(); ++b)
            CHECK(o.geq(a, b) == oracle::nim_geq(oracle::name(g, a), oracle::name(g, b)));
    CHECK(o.compare(g.at("A5"), g.at("A2")) == Cmp::Greater);
    CHECK(o.compare(g.at("A2"), g.at("A5")) == Cmp::Less);
    CHECK(o.compare(g.at("A2"), g.at("A3")) == Cmp::Incomparable);
    CHECK(o.compare(g.at("A6"), g.at("A6")) == Cmp::Equal);
    CHECK(o.compare(g.at("A4"), g.at("B4")) == Cmp::Incomparable);
    CHECK(check_partial_order(o, g).empty());
}

TEST_CASE("down and up closure queries", "[order]")
{
    auto f = gen_nim({8});
    const auto& g = *f.game;
    Antichain max(Antichain::Mode::Max, *f.order);
    for (VertexId v : ids(g, {"B7", "A6", "A5"})) max.insert(v);
    CHECK(max.in_down_closure(g.at("A2")));
    CHECK(max.in_down_closure(g.at("A6")));
    CHECK_FALSE(max.in_down_closure(g.at("A4")));
    CHECK(max.covers(g.at("B1")));
    CHECK(g.name(*max.first_cover(g.at("A0"))) == "A6");
    CHECK_FALSE(max.first_cover(g.at("A7")).has_value());
    CHECK_THROWS_AS(max.in_up_closure(g.at("A2")), Error);

    Antichain min(Antichain::Mode::Min, *f.order);
    for (VertexId v : ids(g, {"A7", "B8"})) min.insert(v);
    CHECK(min.in_up_closure(g.at("A7")));
    CHECK_FALSE(min.in_up_closure(g.at("A5")));
    CHECK_FALSE(min.in_up_closure(g.at("A4")));
    CHECK_THROWS_AS(min.in_down_closure(g.at("A2")), Error);

    EqualityOrder eq;
    Antichain e(Antichain::Mode::Min, eq);
    e.insert(3);
    e.insert(5);
    for (VertexId v = 0; v < 8; ++v) CHECK(e.in_up_closure(v) == (v == 3 || v == 5));
}

TEST_CASE("insertion keeps maximal or minimal elements", "[order]")
{
    auto f = gen_nim({8});
    const auto& g = *f.game;

    Antichain max(Antichain::Mode::Max, *f.order);
    max.insert(g.at("A2"));
    CHECK(max.insert(g.at("A5")));
    CHECK(names(g, max.elements()) == oracle::Names{"A5"});
    CHECK_FALSE(max.insert(g.at("A2")));
    CHECK(names(g, max.elements()) == oracle::Names{"A5"});

    Antichain min(Antichain::Mode::Min, *f.order);
    min.insert(g.at("B8"));
    CHECK(min.insert(g.at("A7")));
    CHECK(names(g, min.elements()) == oracle::Names{"B8", "A7"});
    min.insert(g.at("B2"));
    CHECK(names(g, min.elements()) == oracle::Names{"B2", "A7"});
    CHECK_FALSE(min.insert(g.at("B5")));

    // every insertion order of the winning states gives the same maximal antichain
    const auto win_set = oracle::win(g);
    std::vector<std::string> win(win_set.begin(), win_set.end());
    std::sort(win.begin(), win.end());
    std::mt19937 rng(5);
    for (int round = 0; round < 50; ++round) {
        std::shuffle(win.begin(), win.end(), rng);
        Antichain a(Antichain::Mode::Max, *f.order);
        for (const auto& v : win) a.insert(g.at(v));
        CHECK(names(g, a.elements()) == oracle::Names{"B7", "A6", "A5"});
        CHECK(a.is_antichain());
    }

    // losing states: compare with exhaustive minimisation
    oracle::Names losing;
    for (const auto& v : oracle::all_vertices(g))
        if (!win_set.count(v)) losing.insert(v);
    std::vector<std::string> lv(losing.begin(), losing.end());
    for (int round = 0; round < 20; ++round) {
        std::shuffle(lv.begin(), lv.end(), rng);
        Antichain a(Antichain::Mode::Min, *f.order);
        for (const auto& v : lv) a.insert(g.at(v));
        CHECK(names(g, a.elements()) == oracle::min_antichain(losing, geq_of(g, *f.order)));
    }
}

TEST_CASE("max_antichain of the winning region", "[order]")
{
    auto f = gen_nim({8});
    const auto& g = *f.game;
    std::vector<VertexId> win = ids(g, {"A0", "A2", "A3", "A5", "A6", "B1", "B4", "B7"});
    CHECK(names(g, max_antichain(win, *f.order).elements()) == oracle::Names{"B7", "A6", "A5"});
    CHECK(max_antichain(std::vector<VertexId>{}, *f.order).empty());
    CHECK(min_antichain(std::vector<VertexId>{}, *f.order).empty());
}

TEST_CASE("antichains preserve closures on random posets", "[order]")
{
    std::mt19937 rng(2026);
    for (int round = 0; round < 100; ++round) {
        auto g = gen_random({12, 0.0, static_cast<std::uint64_t>(round)});
        auto o = random_order(g, rng);
        REQUIRE(check_partial_order(o, g).empty());
        auto geq = geq_of(g, o);
        auto universe = oracle::all_vertices(g);

        std::vector<VertexId> subset;
        oracle::Names raw;
        std::bernoulli_distribution coin(0.5);
        for (VertexId v = 0; v < g.size(); ++v)
            if (coin(rng)) {
                subset.push_back(v);
                raw.insert(oracle::name(g, v));
            }

        auto max = max_antichain(subset, o);
        auto min = min_antichain(subset, o);
        CHECK(max.is_antichain());
        CHECK(min.is_antichain());
        CHECK(names(g, max.elements()) == oracle::max_antichain(raw, geq));
        CHECK(names(g, min.elements()) == oracle::min_antichain(raw, geq));
        auto down = oracle::down_closure(raw, universe, geq);
        auto up = oracle::up_closure(raw, universe, geq);
        for (VertexId v = 0; v < g.size(); ++v) {
            CHECK(max.in_down_closure(v) == (down.count(oracle::name(g, v)) == 1));
            CHECK(min.in_up_closure(v) == (up.count(oracle::name(g, v)) == 1));
        }
    }
}

TEST_CASE("explicit tables", "[order]")
{
    ExplicitGame g;
    auto a1 = g.add_vertex("a1", Player::A);
    auto a2 = g.add_vertex("a2", Player::A);
    auto a3 = g.add_vertex("a3", Player::A);
    g.set_initial(a1);

    auto closed = RelationOrder::closed(g, {{a1, a2}, {a2, a3}});
    CHECK(closed.geq(a1, a3));
    CHECK(check_partial_order(closed, g).empty());

    CHECK_THROWS_AS(RelationOrder::closed(g, {{a1, a2}, {a2, a1}}), Error);
    auto cyc = RelationOrder::raw(g, {{a1, a2}, {a2, a1}});
    auto v = check_partial_order(cyc, g);
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].kind == "antisymmetry");

    auto open = RelationOrder::raw(g, {{a1, a2}, {a2, a3}});
    v = check_partial_order(open, g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == "transitivity");
    CHECK(v[0].message.find("a1") != std::string::npos);
    CHECK(v[0].message.find("a3") != std::string::npos);

    auto b = g.add_vertex("b", Player::B);
    auto mixed = RelationOrder::raw(g, {{a1, b}});
    v = check_partial_order(mixed, g);
    REQUIRE(v.size() == 1);
    CHECK(v[0].kind == "owner");
}

TEST_CASE("make_order resolves names", "[order]")
{
    auto f = gen_nim({8});
    CHECK(make_order("equality", *f.game)->kind() == "equality");
    CHECK(make_order("nim-mod3", *f.game)->kind() == "nim-mod3");
    CHECK(make_order("vector", *f.game)->kind() == "vector");
    CHECK(make_order(std::string("file:") + SAFEGAME_TEST_DATA + "/nim8.ord", *f.game)->kind() ==
          "table");
    CHECK_THROWS_AS(make_order("bogus", *f.game), Error);
    CHECK_THROWS_AS(make_order("file:/nonexistent", *f.game), Error);
    NimGame implicit{NimModel(NimSpec(8))};
    CHECK_THROWS_AS(make_order("file:x", implicit), Error);
}

TEST_CASE("vector order", "[order]")
{
    auto f = gen_vector(VectorGameSpec::standard(2, 3));
    const auto& g = *f.game;
    CHECK(check_partial_order(*f.order, g).empty());
    auto find = [&](const char* n) { return g.at(n); };
    CHECK(f.order->geq(find("B:2,1:hold"), find("B:1,1:hold")));
    CHECK_FALSE(f.order->geq(find("B:2,1:hold"), find("B:1,1:dec1")));
    CHECK_FALSE(f.order->geq(find("B:2,0:hold"), find("B:1,1:hold")));
}

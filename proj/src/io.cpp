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

#include "safegame/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace sg {

namespace {

struct LineReader {
    LineReader(std::istream& input, std::string kind) : in(input), what(std::move(kind)) {}

    std::istream& in;
    std::string what;
    std::size_t lineno = 0;
    std::vector<std::string> tokens;

    bool next()
    {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            std::istringstream ss(line);
            tokens.clear();
            for (std::string t; ss >> t;) tokens.push_back(std::move(t));
            if (!tokens.empty()) return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw Error(ErrorKind::Parse, what + " line " + std::to_string(lineno) + ": " + msg);
    }

    void arity(std::size_t lo, std::size_t hi) const
    {
        if (tokens.size() < lo || tokens.size() > hi)
            fail("wrong number of fields for '" + tokens[0] + "'");
    }

    VertexId vertex(const ExplicitGame& g, const std::string& id) const
    {
        auto v = g.find(id);
        if (!v) fail("unknown vertex '" + id + "'");
        return *v;
    }
};

std::ifstream open_in(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    return in;
}

} // namespace

ExplicitGame read_game(std::istream& in)
{
    LineReader r{in, "game"};
    ExplicitGame g;
    bool named = false, seen_edge = false;
    std::string init;
    while (r.next()) {
        const auto& t = r.tokens;
        if (t[0] == "game") {
            r.arity(2, 2);
            if (named) r.fail("duplicate 'game' line");
            named = true;
            g.set_game_name(t[1]);
        } else if (t[0] == "v") {
            r.arity(3, 4);
            if (seen_edge) r.fail("vertex declared after an edge");
            if (t[2] != "A" && t[2] != "B") r.fail("owner must be A or B, got '" + t[2] + "'");
            if (t.size() == 4 && t[3] != "bad") r.fail("unexpected token '" + t[3] + "'");
            try {
                g.add_vertex(t[1], t[2] == "A" ? Player::A : Player::B, t.size() == 4);
            } catch (const Error& e) {
                r.fail(e.what());
            }
        } else if (t[0] == "e") {
            r.arity(3, 4);
            seen_edge = true;
            VertexId s = r.vertex(g, t[1]);
            VertexId d = r.vertex(g, t[2]);
            try {
                g.add_edge(s, d, t.size() == 4 ? t[3] : std::string());
            } catch (const Error& e) {
                r.fail(e.what());
            }
        } else if (t[0] == "init") {
            r.arity(2, 2);
            if (!init.empty()) r.fail("duplicate 'init' line");
            init = t[1];
            g.set_initial(r.vertex(g, init));
        } else {
            r.fail("unknown directive '" + t[0] + "'");
        }
    }
    if (init.empty()) throw Error(ErrorKind::Parse, "game: missing 'init' line");
    return g;
}

ExplicitGame load_game(const std::string& path)
{
    auto in = open_in(path);
    return read_game(in);
}

void write_game(std::ostream& out, const ExplicitGame& g)
{
    out << "game " << g.game_name() << '\n';
    for (VertexId v = 0; v < g.size(); ++v) {
        out << "v " << g.name(v) << ' ' << to_char(g.owner(v));
        if (g.is_bad(v)) out << " bad";
        out << '\n';
    }
    for (const auto& e : g.edges()) {
        out << "e " << g.name(e.src) << ' ' << g.name(e.dst);
        if (!e.label.empty()) out << ' ' << e.label;
        out << '\n';
    }
    if (g.has_initial()) out << "init " << g.name(g.initial()) << '\n';
}

void save_game(const std::string& path, const ExplicitGame& g)
{
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
    write_game(out, g);
}

RelationOrder read_order(std::istream& in, const ExplicitGame& g)
{
    LineReader r{in, "order"};
    std::vector<std::pair<VertexId, VertexId>> pairs;
    while (r.next()) {
        if (r.tokens[0] != "ge") r.fail("unknown directive '" + r.tokens[0] + "'");
        r.arity(3, 3);
        pairs.emplace_back(r.vertex(g, r.tokens[1]), r.vertex(g, r.tokens[2]));
    }
    return RelationOrder::closed(g, pairs);
}

void write_order(std::ostream& out, const PartialOrder& o, const ExplicitGame& g)
{
    for (auto [a, b] : strict_pairs(o, g)) out << "ge " << g.name(a) << ' ' << g.name(b) << '\n';
}

StarStrategy read_strategy(std::istream& in, const ExplicitGame& g)
{
    LineReader r{in, "strategy"};
    StarStrategy s;
    while (r.next()) {
        if (r.tokens[0] != "map") r.fail("unknown directive '" + r.tokens[0] + "'");
        r.arity(3, 3);
        VertexId v = r.vertex(g, r.tokens[1]);
        if (s.in_support(v)) r.fail("vertex '" + r.tokens[1] + "' mapped twice");
        s.set(v, r.vertex(g, r.tokens[2]));
    }
    check_strategy_edges(g, s);
    return s;
}

StarStrategy load_strategy(const std::string& path, const ExplicitGame& g)
{
    auto in = open_in(path);
    return read_strategy(in, g);
}

void write_strategy(std::ostream& out, const StarStrategy& s, const Game& g)
{
    std::vector<std::pair<std::string_view, std::string_view>> lines;
    for (auto [v, w] : s.entries()) lines.emplace_back(g.name(v), g.name(w));
    std::sort(lines.begin(), lines.end());
    for (auto [v, w] : lines) out << "map " << v << ' ' << w << '\n';
}

} // namespace sg

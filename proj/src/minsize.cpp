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

#include "safegame/minsize.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "safegame/solvers.hpp"

namespace sg {

// --- CNF ---------------------------------------------------------------------

CnfFormula read_dimacs(std::istream& in)
{
    CnfFormula phi;
    long declared = -1;
    std::vector<int> clause;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw Error(ErrorKind::Parse, "dimacs line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tok;
        if (!(ss >> tok) || tok == "c") continue;
        if (tok == "%") break;
        if (tok == "p") {
            std::string fmt;
            if (declared >= 0) fail("duplicate header");
            if (!(ss >> fmt >> phi.num_vars >> declared) || fmt != "cnf" || phi.num_vars < 0 ||
                declared < 0)
                fail("malformed header, expected 'p cnf <vars> <clauses>'");
            continue;
        }
        if (declared < 0) fail("clause before the 'p cnf' header");
        ss.clear();
        ss.str(line);
        for (long lit; ss >> lit;) {
            if (lit == 0) {
                if (clause.empty()) fail("empty clause");
                phi.clauses.push_back(std::move(clause));
                clause.clear();
            } else {
                if (std::labs(lit) > phi.num_vars) fail("literal " + std::to_string(lit) + " out of range");
                clause.push_back(static_cast<int>(lit));
            }
        }
        if (!ss.eof()) fail("unexpected token");
    }
    if (declared < 0) throw Error(ErrorKind::Parse, "dimacs: missing 'p cnf' header");
    if (!clause.empty()) throw Error(ErrorKind::Parse, "dimacs: last clause not terminated by 0");
    if (static_cast<long>(phi.clauses.size()) != declared)
        throw Error(ErrorKind::Parse, "dimacs: header declares " + std::to_string(declared) +
                                          " clauses, found " + std::to_string(phi.clauses.size()));
    return phi;
}

CnfFormula load_dimacs(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const CnfFormula& phi)
{
    out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto& c : phi.clauses) {
        for (int lit : c) out << lit << ' ';
        out << "0\n";
    }
}

bool satisfies(const CnfFormula& phi, const Assignment& a)
{
    if (a.size() != static_cast<std::size_t>(phi.num_vars))
        throw Error(ErrorKind::Precondition, "assignment has the wrong number of variables");
    for (const auto& c : phi.clauses) {
        bool sat = false;
        for (int lit : c) sat = sat || a[std::abs(lit) - 1] == (lit > 0);
        if (!sat) return false;
    }
    return true;
}

std::optional<Assignment> brute_force_sat(const CnfFormula& phi)
{
    if (phi.num_vars > 24) throw Error(ErrorKind::Resource, "too many variables for a truth table");
    const unsigned long rows = 1ul << phi.num_vars;
    for (unsigned long bits = 0; bits < rows; ++bits) {
        Assignment a(phi.num_vars);
        for (int i = 0; i < phi.num_vars; ++i) a[i] = (bits >> i) & 1u;
        if (satisfies(phi, a)) return a;
    }
    return std::nullopt;
}

// --- Reduction ---------------------------------------------------------------

ReductionOutput reduce_sat(const CnfFormula& phi)
{
    ReductionOutput r;
    r.phi = phi;
    r.k = 2 * static_cast<std::size_t>(phi.num_vars) + phi.clauses.size();
    auto& g = r.game;
    g.set_game_name("sat-reduction");
    r.init_a = g.add_vertex("initA", Player::A);
    r.init_b = g.add_vertex("initB", Player::B);
    r.bad = g.add_vertex("bad", Player::B, true);
    for (int i = 1; i <= phi.num_vars; ++i) {
        auto s = std::to_string(i);
        ReductionOutput::VarGadget v{};
        v.choose = g.add_vertex("X" + s, Player::A);
        v.pos_a = g.add_vertex("x" + s + "A", Player::A);
        v.neg_a = g.add_vertex("nx" + s + "A", Player::A);
        v.pos_b = g.add_vertex("x" + s + "B", Player::B);
        v.neg_b = g.add_vertex("nx" + s + "B", Player::B);
        r.vars.push_back(v);
    }
    for (std::size_t j = 1; j <= phi.clauses.size(); ++j)
        r.clauses.push_back(g.add_vertex("C" + std::to_string(j), Player::A));

    g.add_edge(r.init_a, r.init_b);
    for (const auto& v : r.vars) g.add_edge(r.init_b, v.choose);
    for (VertexId c : r.clauses) g.add_edge(r.init_b, c);
    for (const auto& v : r.vars) {
        g.add_edge(v.choose, v.pos_b);
        g.add_edge(v.choose, v.neg_b);
        g.add_edge(v.choose, r.bad);
        g.add_edge(v.pos_b, v.pos_a);
        g.add_edge(v.neg_b, v.neg_a);
        g.add_edge(v.pos_a, r.init_b);
        g.add_edge(v.pos_a, r.bad);
        g.add_edge(v.neg_a, r.init_b);
        g.add_edge(v.neg_a, r.bad);
    }
    for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
        for (int lit : phi.clauses[j]) {
            const auto& v = r.vars.at(std::abs(lit) - 1);
            VertexId target = lit > 0 ? v.pos_b : v.neg_b;
            if (!g.edge_index(r.clauses[j], target)) g.add_edge(r.clauses[j], target);
        }
        g.add_edge(r.clauses[j], r.bad);
    }
    g.set_initial(r.init_a);
    return r;
}

StarStrategy strategy_from_assignment(const ReductionOutput& r, const Assignment& a)
{
    if (!satisfies(r.phi, a))
        throw Error(ErrorKind::Precondition, "assignment does not satisfy the formula");
    StarStrategy s;
    for (std::size_t i = 0; i < r.vars.size(); ++i) {
        const auto& v = r.vars[i];
        s.set(v.choose, a[i] ? v.pos_b : v.neg_b);
        s.set(a[i] ? v.pos_a : v.neg_a, r.init_b);
    }
    for (std::size_t j = 0; j < r.clauses.size(); ++j) {
        for (int lit : r.phi.clauses[j]) {
            if (a[std::abs(lit) - 1] != (lit > 0)) continue;
            const auto& v = r.vars[std::abs(lit) - 1];
            s.set(r.clauses[j], lit > 0 ? v.pos_b : v.neg_b);
            break;
        }
    }
    return s;
}

Assignment assignment_from_strategy(const ReductionOutput& r, const StarStrategy& s)
{
    if (s.size() > r.k) throw Error(ErrorKind::Precondition, "strategy is larger than k");
    if (!is_winning_star(r.game, s)) throw Error(ErrorKind::Precondition, "strategy is not winning");
    Assignment a(r.vars.size());
    for (std::size_t i = 0; i < r.vars.size(); ++i) a[i] = s.at(r.vars[i].choose) == r.vars[i].pos_b;
    return a;
}

// --- Exact search --------------------------------------------------------------

namespace {

class MinSizeSearch {
public:
    MinSizeSearch(const ExplicitGame& g, std::size_t budget) : g_(g), budget_(budget) {}

    // Some winning strategy of size <= limit, if any.
    std::optional<StarStrategy> run(std::size_t limit)
    {
        seen_.clear();
        StarStrategy s;
        if (dfs(s, limit)) return s;
        return std::nullopt;
    }

    bool exhausted() const { return exhausted_; }
    std::size_t nodes() const { return nodes_; }

private:
    // Shortest path from I to Bad or to a stuck A-vertex in the restricted graph.
    std::vector<VertexId> losing_path(const StarStrategy& s) const
    {
        std::vector<VertexId> parent(g_.size(), kNoVertex);
        VertexSet seen;
        std::deque<VertexId> queue{g_.initial()};
        seen.insert(g_.initial());
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            bool stuck = g_.owner(v) == Player::A && g_.successors(v).empty();
            if (g_.is_bad(v) || stuck) {
                std::vector<VertexId> path;
                for (VertexId x = v; x != kNoVertex; x = parent[x]) path.push_back(x);
                std::reverse(path.begin(), path.end());
                return path;
            }
            auto visit = [&](VertexId w) {
                if (seen.insert(w)) {
                    parent[w] = v;
                    queue.push_back(w);
                }
            };
            if (auto w = s.at(v))
                visit(*w);
            else
                for (VertexId w : g_.successors(v)) visit(w);
        }
        return {};
    }

    bool dfs(StarStrategy& s, std::size_t left)
    {
        if (exhausted_) return false;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return false;
        }
        auto path = losing_path(s);
        if (path.empty()) return true;
        if (left == 0) return false;
        std::string key;
        for (auto [v, w] : s.entries()) key += std::to_string(v) + ">" + std::to_string(w) + ";";
        key += "|" + std::to_string(left);
        if (!seen_.insert(key).second) return false;
        // Any winning extension must divert one of the free A-vertices on the path.
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            VertexId u = path[i];
            if (g_.owner(u) != Player::A || s.in_support(u)) continue;
            for (VertexId w : g_.successors(u)) {
                if (w == path[i + 1]) continue;
                s.set(u, w);
                if (dfs(s, left - 1)) return true;
                s.erase(u);
                if (exhausted_) return false;
            }
        }
        return false;
    }

    const ExplicitGame& g_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    bool exhausted_ = false;
    std::set<std::string> seen_;
};

} // namespace

MinSizeResult min_star_strategy_size(const Game& game, std::size_t budget)
{
    const auto& g = require_explicit(game, "min_star_strategy_size");
    MinSizeResult res;
    if (solve_attractor(g).attractor.contains(g.initial())) {
        res.status = MinSizeStatus::NoWinningStrategy;
        return res;
    }
    std::size_t num_a = 0;
    for (VertexId v = 0; v < g.size(); ++v) num_a += g.owner(v) == Player::A;

    MinSizeSearch search(g, budget);
    for (std::size_t s = 0; s <= num_a; ++s) {
        auto found = search.run(s);
        res.nodes = search.nodes();
        if (search.exhausted()) {
            res.status = MinSizeStatus::BudgetExhausted;
            return res;
        }
        if (found) {
            if (!is_winning_star(g, *found))
                throw Error(ErrorKind::InvariantViolation, "search produced a losing witness");
            res.status = MinSizeStatus::Found;
            res.size = found->size();
            res.witness = std::move(*found);
            return res;
        }
    }
    // A wins, so the full winning-region strategy (size <= |V_A|) must have been found.
    throw Error(ErrorKind::InvariantViolation, "exact search missed a winning strategy");
}

Decision decide_minsizestrat(const Game& game, std::size_t k, std::size_t budget)
{
    const auto& g = require_explicit(game, "decide_minsizestrat");
    if (solve_attractor(g).attractor.contains(g.initial())) return Decision::No;
    MinSizeSearch search(g, budget);
    auto found = search.run(k);
    if (search.exhausted()) return Decision::BudgetExhausted;
    return found ? Decision::Yes : Decision::No;
}

} // namespace sg

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

#include <iosfwd>
#include <string>

#include "safegame/arena.hpp"
#include "safegame/order.hpp"
#include "safegame/strategy.hpp"

namespace sg {

/*
 * Line-oriented text formats. '#' starts a comment, tokens are separated by
 * whitespace, errors are reported as Parse errors carrying the line number.
 *
 *   game <name>
 *   v <id> <A|B> [bad]
 *   e <src> <dst> [<label>]
 *   init <id>
 *
 * Orders:     ge <v1> <v2>      (v1 dominates v2)
 * Strategies: map <v> <succ>    (support only; absent vertices are don't-care)
 */

ExplicitGame read_game(std::istream& in);
ExplicitGame load_game(const std::string& path);
/// Vertices and edges in insertion order, so read/write round-trips exactly.
void write_game(std::ostream& out, const ExplicitGame& g);
void save_game(const std::string& path, const ExplicitGame& g);

/// Reflexive-transitive closure of the listed pairs; see RelationOrder::closed.
RelationOrder read_order(std::istream& in, const ExplicitGame& g);
/// Writes the strictly comparable pairs of o.
void write_order(std::ostream& out, const PartialOrder& o, const ExplicitGame& g);

/// Entries are checked against g (must be edges leaving A-vertices).
StarStrategy read_strategy(std::istream& in, const ExplicitGame& g);
StarStrategy load_strategy(const std::string& path, const ExplicitGame& g);
/// One line per support entry, sorted by vertex id string.
void write_strategy(std::ostream& out, const StarStrategy& s, const Game& g);

} // namespace sg

#ifndef SYMDYN_SRC_GRAPH_UTIL_HPP
#define SYMDYN_SRC_GRAPH_UTIL_HPP

// Internal helpers shared by the modules: Tarjan SCCs over index graphs,
// infinite-path pruning, and subset steps on vertex-labeled graphs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/shift.hpp"

namespace symdyn::detail {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

struct Sccs {
  std::vector<std::uint32_t> component;             // node -> component id
  std::vector<std::vector<std::uint32_t>> members;  // sorted members per component
  std::vector<bool> cyclic;                         // component carries an edge
};

// Components are numbered in reverse topological order (sinks first).
Sccs strongly_connected(const Adjacency& adj);

Adjacency reversed(const Adjacency& adj);

// Nodes from which an infinite forward path exists.
std::vector<bool> forward_infinite(const Adjacency& adj);
// Nodes admitting an infinite backward path (reachable from a cycle).
std::vector<bool> backward_infinite(const Adjacency& adj);

// BFS shortest path from any node in `sources` to `target` inside `allowed`;
// empty when unreachable. Path includes both endpoints.
std::vector<std::uint32_t> shortest_path(const Adjacency& adj, const std::vector<std::uint32_t>& sources,
                                         std::uint32_t target, const std::vector<bool>* allowed = nullptr);

// Shortest cycle through `node` (returns node ... last, closing edge back to node).
std::vector<std::uint32_t> cycle_through(const Adjacency& adj, std::uint32_t node,
                                         const std::vector<bool>* allowed = nullptr);

// Shortest path from `node` to some node lying on a cycle within `allowed`,
// followed by that cycle. Returns {path, cycle}; path ends at cycle[0].
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> path_to_cycle(
    const Adjacency& adj, std::uint32_t node, const std::vector<bool>* allowed = nullptr);

Adjacency adjacency(const OneStepSft& sft);

// T(S, a) = { j : label(j) = a and i -> j for some i in S }.
SymbolSet step(const OneBlockCode& code, const SymbolSet& from, LetterId letter);
// { j in S : label(j) = a }.
SymbolSet select(const OneBlockCode& code, const SymbolSet& set, LetterId letter);
SymbolSet successors_of(const OneStepSft& sft, const SymbolSet& set);

// Languages read by vertex-labeled graphs from a start set: a1...an is read
// when some path p1...pn has p1 in the start set and label(pk) = ak. Letters
// are matched by name. Returns a shortest word read by exactly one side.
std::optional<std::vector<std::string>> separating_word(const OneBlockCode& a, const SymbolSet& start_a,
                                                        const OneBlockCode& b, const SymbolSet& start_b);

std::vector<std::uint32_t> primitive_root(const std::vector<std::uint32_t>& word);

}  // namespace symdyn::detail

#endif  // SYMDYN_SRC_GRAPH_UTIL_HPP

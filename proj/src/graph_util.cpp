#include "graph_util.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace symdyn::detail {

Sccs strongly_connected(const Adjacency& adj) {
  // Iterative Tarjan; recursion depth would be unbounded on long chains.
  const std::size_t n = adj.size();
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  Sccs out;
  out.component.assign(n, kUnset);
  std::uint32_t counter = 0;

  struct Frame {
    std::uint32_t node;
    std::size_t next;
  };
  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < adj[f.node].size()) {
        std::uint32_t w = adj[f.node][f.next++];
        if (index[w] == kUnset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], index[w]);
        }
        continue;
      }
      std::uint32_t v = f.node;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().node] = std::min(low[frames.back().node], low[v]);
      if (low[v] == index[v]) {
        std::vector<std::uint32_t> members;
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component[w] = static_cast<std::uint32_t>(out.members.size());
          members.push_back(w);
        } while (w != v);
        std::sort(members.begin(), members.end());
        bool cyclic = members.size() > 1;
        if (!cyclic) {
          const auto& s = adj[v];
          cyclic = std::find(s.begin(), s.end(), v) != s.end();
        }
        out.members.push_back(std::move(members));
        out.cyclic.push_back(cyclic);
      }
    }
  }
  return out;
}

Adjacency reversed(const Adjacency& adj) {
  Adjacency rev(adj.size());
  for (std::uint32_t v = 0; v < adj.size(); ++v)
    for (std::uint32_t w : adj[v]) rev[w].push_back(v);
  for (auto& r : rev) std::sort(r.begin(), r.end());
  return rev;
}

std::vector<bool> forward_infinite(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> out_degree(n);
  Adjacency rev = reversed(adj);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t v = 0; v < n; ++v) {
    out_degree[v] = adj[v].size();
    if (out_degree[v] == 0) queue.push_back(v);
  }
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = false;
    for (std::uint32_t p : rev[v])
      if (alive[p] && --out_degree[p] == 0) queue.push_back(p);
  }
  return alive;
}

std::vector<bool> backward_infinite(const Adjacency& adj) { return forward_infinite(reversed(adj)); }

std::vector<std::uint32_t> shortest_path(const Adjacency& adj, const std::vector<std::uint32_t>& sources,
                                         std::uint32_t target, const std::vector<bool>* allowed) {
  const std::size_t n = adj.size();
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> parent(n, kNone);
  std::vector<bool> seen(n, false);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t s : sources) {
    if (allowed && !(*allowed)[s]) continue;
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    if (v == target) {
      std::vector<std::uint32_t> path;
      for (std::uint32_t c = v; c != kNone; c = parent[c]) path.push_back(c);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::uint32_t w : adj[v]) {
      if (seen[w] || (allowed && !(*allowed)[w])) continue;
      seen[w] = true;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  return {};
}

std::vector<std::uint32_t> cycle_through(const Adjacency& adj, std::uint32_t node, const std::vector<bool>* allowed) {
  std::vector<std::uint32_t> best;
  for (std::uint32_t w : adj[node]) {
    if (allowed && !(*allowed)[w]) continue;
    if (w == node) return {node};
    auto path = shortest_path(adj, {w}, node, allowed);
    if (path.empty()) continue;
    if (best.empty() || path.size() + 1 < best.size()) {
      best.clear();
      best.push_back(node);
      best.insert(best.end(), path.begin(), path.end() - 1);
    }
  }
  return best;
}

std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> path_to_cycle(const Adjacency& adj,
                                                                                std::uint32_t node,
                                                                                const std::vector<bool>* allowed) {
  const std::size_t n = adj.size();
  Adjacency local(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (allowed && !(*allowed)[v]) continue;
    for (std::uint32_t w : adj[v])
      if (!allowed || (*allowed)[w]) local[v].push_back(w);
  }
  Sccs sccs = strongly_connected(local);
  std::vector<std::uint32_t> on_cycle;
  for (std::uint32_t v = 0; v < n; ++v)
    if (sccs.cyclic[sccs.component[v]]) on_cycle.push_back(v);
  // BFS from node to the nearest cyclic node.
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> parent(n, kNone);
  std::vector<bool> seen(n, false);
  std::deque<std::uint32_t> queue{node};
  seen[node] = true;
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    if (sccs.cyclic[sccs.component[v]]) {
      std::vector<std::uint32_t> path;
      for (std::uint32_t c = v; c != kNone; c = parent[c]) path.push_back(c);
      std::reverse(path.begin(), path.end());
      return {path, cycle_through(local, v)};
    }
    for (std::uint32_t w : local[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      queue.push_back(w);
    }
  }
  return {};
}

Adjacency adjacency(const OneStepSft& sft) {
  Adjacency adj(sft.size());
  for (SymbolId s = 0; s < sft.size(); ++s) {
    auto succ = sft.successors(s);
    adj[s].assign(succ.begin(), succ.end());
  }
  return adj;
}

SymbolSet step(const OneBlockCode& code, const SymbolSet& from, LetterId letter) {
  SymbolSet out;
  for (SymbolId i : from)
    for (SymbolId j : code.domain().successors(i))
      if (code.label(j) == letter) out.push_back(j);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SymbolSet select(const OneBlockCode& code, const SymbolSet& set, LetterId letter) {
  SymbolSet out;
  for (SymbolId j : set)
    if (code.label(j) == letter) out.push_back(j);
  return out;
}

SymbolSet successors_of(const OneStepSft& sft, const SymbolSet& set) {
  SymbolSet out;
  for (SymbolId i : set)
    for (SymbolId j : sft.successors(i)) out.push_back(j);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<std::vector<std::string>> separating_word(const OneBlockCode& a, const SymbolSet& start_a,
                                                        const OneBlockCode& b, const SymbolSet& start_b) {
  std::set<std::string> letters(a.alphabet().begin(), a.alphabet().end());
  letters.insert(b.alphabet().begin(), b.alphabet().end());
  const std::vector<std::string> alphabet(letters.begin(), letters.end());

  // State (Sa, Sb, started). Before the first letter the start sets apply
  // unfiltered; afterwards successor steps apply.
  using State = std::pair<SymbolSet, SymbolSet>;
  std::map<State, std::pair<std::optional<State>, std::string>> parent;
  std::deque<State> queue;

  auto advance = [](const OneBlockCode& code, const SymbolSet& set, bool first, const std::string& letter) {
    auto l = code.find_letter(letter);
    if (!l) return SymbolSet{};
    return first ? select(code, set, *l) : step(code, set, *l);
  };
  auto trace = [&](const State& end) {
    std::vector<std::string> word;
    std::optional<State> cur = end;
    while (cur) {
      auto& [prev, letter] = parent.at(*cur);
      word.push_back(letter);
      cur = prev;
    }
    std::reverse(word.begin(), word.end());
    return word;
  };

  for (const auto& letter : alphabet) {
    State next{advance(a, start_a, true, letter), advance(b, start_b, true, letter)};
    if (next.first.empty() && next.second.empty()) continue;
    if (parent.count(next)) continue;
    parent.emplace(next, std::make_pair(std::nullopt, letter));
    if (next.first.empty() != next.second.empty()) return trace(next);
    queue.push_back(next);
  }
  while (!queue.empty()) {
    State cur = queue.front();
    queue.pop_front();
    for (const auto& letter : alphabet) {
      State next{advance(a, cur.first, false, letter), advance(b, cur.second, false, letter)};
      if (next.first.empty() && next.second.empty()) continue;
      if (parent.count(next)) continue;
      parent.emplace(next, std::make_pair(std::optional<State>(cur), letter));
      if (next.first.empty() != next.second.empty()) return trace(next);
      queue.push_back(next);
    }
  }
  return std::nullopt;
}

std::vector<std::uint32_t> primitive_root(const std::vector<std::uint32_t>& word) {
  const std::size_t n = word.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = word[i] == word[i - p];
    if (ok) return {word.begin(), word.begin() + static_cast<std::ptrdiff_t>(p)};
  }
  return word;
}

}  // namespace symdyn::detail

#include "symdyn/cover.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "graph_util.hpp"
#include "symdyn/error.hpp"

namespace symdyn {

using detail::step;

std::optional<std::size_t> PastSubsetAutomaton::find(const SymbolSet& set) const {
  auto it = std::find(states.begin(), states.end(), set);
  if (it == states.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states.begin());
}

std::string subset_name(const OneStepSft& domain, const SymbolSet& set) {
  std::vector<std::string> names;
  for (SymbolId s : set) names.push_back(domain.symbol_name(s));
  std::sort(names.begin(), names.end());
  std::string out;
  for (std::size_t k = 0; k < names.size(); ++k) {
    if (k > 0) out += '+';
    out += names[k];
  }
  return out;
}

std::string cover_symbol_name(const OneStepSft& domain, const CoverSymbol& symbol) {
  return subset_name(domain, symbol.v) + "|" + domain.symbol_name(symbol.i);
}

namespace {

// Forward closure of `seeds` under every letter step.
std::vector<SymbolSet> step_closure(const OneBlockCode& code, const std::vector<SymbolSet>& seeds, std::size_t cap) {
  std::set<SymbolSet> seen(seeds.begin(), seeds.end());
  std::deque<SymbolSet> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    SymbolSet cur = std::move(queue.front());
    queue.pop_front();
    for (LetterId a = 0; a < code.alphabet().size(); ++a) {
      SymbolSet next = step(code, cur, a);
      if (next.empty() || seen.count(next)) continue;
      if (seen.size() >= cap)
        fail(ErrorKind::StateBlowup, "subset construction for " + code.name() + " exceeds cap " + std::to_string(cap));
      seen.insert(next);
      queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

// X0 terminates a periodic left ray w^inf exactly when some word w drives
// All to X0 and X0 to itself.
bool is_base(const OneBlockCode& code, const SymbolSet& all, const SymbolSet& x0, std::size_t cap) {
  using Pair = std::pair<SymbolSet, SymbolSet>;
  std::set<Pair> seen;
  std::deque<Pair> queue;
  auto push = [&](const SymbolSet& z, const SymbolSet& x) {
    for (LetterId a = 0; a < code.alphabet().size(); ++a) {
      SymbolSet nx = step(code, x, a);
      if (nx.empty()) continue;
      Pair next{step(code, z, a), std::move(nx)};
      if (next.first == x0 && next.second == x0) return true;
      if (seen.insert(next).second) {
        if (seen.size() > cap * 64)
          fail(ErrorKind::StateBlowup, "past-subset pair search for " + code.name() + " exceeds cap");
        queue.push_back(std::move(next));
      }
    }
    return false;
  };
  if (push(all, x0)) return true;
  while (!queue.empty()) {
    Pair cur = std::move(queue.front());
    queue.pop_front();
    if (push(cur.first, cur.second)) return true;
  }
  return false;
}

}  // namespace

PastSubsetAutomaton past_subset_automaton(const OneBlockCode& code, std::size_t cap) {
  const OneStepSft& dom = code.domain();
  if (dom.empty()) fail(ErrorKind::EmptyShift, "code " + code.name() + " has an empty domain");
  if (!dom.is_essential()) fail(ErrorKind::NotEssential, "domain of " + code.name() + " is not essential");
  const SymbolSet all = dom.all_symbols();
  std::vector<SymbolSet> reach = step_closure(code, {all}, cap);

  std::map<SymbolSet, std::uint32_t> index;
  for (std::uint32_t k = 0; k < reach.size(); ++k) index[reach[k]] = k;
  detail::Adjacency adj(reach.size());
  for (std::uint32_t k = 0; k < reach.size(); ++k)
    for (LetterId a = 0; a < code.alphabet().size(); ++a) {
      SymbolSet next = step(code, reach[k], a);
      if (!next.empty()) adj[k].push_back(index.at(next));
    }
  detail::Sccs sccs = detail::strongly_connected(adj);

  std::vector<SymbolSet> bases;
  for (std::uint32_t k = 0; k < reach.size(); ++k)
    if (sccs.cyclic[sccs.component[k]] && is_base(code, all, reach[k], cap)) bases.push_back(reach[k]);
  std::vector<SymbolSet> states = step_closure(code, bases, cap);

  std::vector<std::pair<std::string, SymbolSet>> named;
  for (auto& s : states) named.emplace_back(subset_name(dom, s), std::move(s));
  std::sort(named.begin(), named.end());

  PastSubsetAutomaton out;
  for (auto& [name, set] : named) {
    out.names.push_back(name);
    out.states.push_back(set);
  }
  std::map<SymbolSet, std::size_t> pos;
  for (std::size_t k = 0; k < out.states.size(); ++k) pos[out.states[k]] = k;
  out.next.assign(out.states.size(), std::vector<std::optional<std::size_t>>(code.alphabet().size()));
  for (std::size_t k = 0; k < out.states.size(); ++k)
    for (LetterId a = 0; a < code.alphabet().size(); ++a) {
      SymbolSet next = step(code, out.states[k], a);
      if (!next.empty()) out.next[k][a] = pos.at(next);
    }
  return out;
}

CommonFutureTable::CommonFutureTable(const OneBlockCode& code) : n_(code.domain().size()) {
  const OneStepSft& dom = code.domain();
  // Pair graph on label-equal pairs; pair id = p * n + q.
  detail::Adjacency adj(n_ * n_);
  for (SymbolId p = 0; p < n_; ++p)
    for (SymbolId q = 0; q < n_; ++q) {
      if (code.label(p) != code.label(q)) continue;
      for (SymbolId p2 : dom.successors(p))
        for (SymbolId q2 : dom.successors(q))
          if (code.label(p2) == code.label(q2)) adj[p * n_ + q].push_back(static_cast<std::uint32_t>(p2 * n_ + q2));
    }
  // Unequal-label pairs have no edges, so they drop out of the infinite set.
  std::vector<bool> infinite = detail::forward_infinite(adj);
  table_.assign(n_ * n_, false);
  for (SymbolId i = 0; i < n_; ++i)
    for (SymbolId j = 0; j < n_; ++j) {
      bool found = false;
      for (SymbolId p : dom.successors(i)) {
        for (SymbolId q : dom.successors(j))
          if (code.label(p) == code.label(q) && infinite[p * n_ + q]) {
            found = true;
            break;
          }
        if (found) break;
      }
      table_[i * n_ + j] = found;
    }
}

bool common_future(const OneBlockCode& code, SymbolId i, SymbolId j) { return CommonFutureTable(code)(i, j); }

SymbolSet e_set(const CommonFutureTable& cf, const SymbolSet& subset, SymbolId i) {
  if (!std::binary_search(subset.begin(), subset.end(), i))
    fail(ErrorKind::SymbolNotInSubset, "symbol is not a member of the past subset");
  SymbolSet out;
  for (SymbolId j : subset)
    if (cf(i, j)) out.push_back(j);
  return out;
}

SymbolSet e_set(const OneBlockCode& code, const SymbolSet& subset, SymbolId i) {
  return e_set(CommonFutureTable(code), subset, i);
}

std::optional<SymbolId> CoverSft::find(const CoverSymbol& symbol) const {
  auto id = sft->find(cover_symbol_name(code.domain(), symbol));
  if (!id || symbols[*id] != symbol) return std::nullopt;
  return id;
}

CoverSft build_cover(const OneBlockCode& code, std::size_t cap) {
  CoverSft out;
  out.code = code;
  out.automaton = past_subset_automaton(code, cap);
  out.common_future = CommonFutureTable(code);
  const OneStepSft& dom = code.domain();
  const auto& aut = out.automaton;

  std::map<CoverSymbol, std::uint32_t> ids;
  std::vector<CoverSymbol> symbols;
  auto intern = [&](const CoverSymbol& c) {
    auto [it, fresh] = ids.emplace(c, static_cast<std::uint32_t>(symbols.size()));
    if (fresh) symbols.push_back(c);
    return it->second;
  };
  std::set<Edge> edges;
  for (std::size_t k = 0; k < aut.states.size(); ++k) {
    const SymbolSet& S = aut.states[k];
    for (SymbolId i : S) {
      std::uint32_t from = intern({e_set(out.common_future, S, i), i});
      for (SymbolId i2 : dom.successors(i)) {
        std::size_t k2 = *aut.next[k][code.label(i2)];
        std::uint32_t to = intern({e_set(out.common_future, aut.states[k2], i2), i2});
        edges.emplace(from, to);
      }
    }
  }
  std::vector<std::string> names;
  for (const auto& c : symbols) names.push_back(cover_symbol_name(dom, c));
  std::vector<SymbolId> remap;
  OneStepSft raw = OneStepSft::from_indexed(code.name() + "+", names, {edges.begin(), edges.end()}, &remap);
  std::vector<CoverSymbol> sorted(symbols.size());
  for (std::size_t k = 0; k < symbols.size(); ++k) sorted[remap[k]] = symbols[k];

  InducedSft trimmed = trim_essential_induced(raw);
  out.sft = share(std::move(trimmed.sft));
  std::vector<LetterId> labels;
  for (SymbolId p : trimmed.to_parent) {
    out.symbols.push_back(sorted[p]);
    labels.push_back(code.label(sorted[p].i));
  }
  out.base_code = OneBlockCode("pi0(" + code.name() + ")", out.sft, code.alphabet(), std::move(labels));
  return out;
}

RayPoint canonical_associate(const CoverSft& cover, const RayPoint& s) {
  const OneBlockCode& code = cover.code;
  const OneStepSft& dom = code.domain();
  if (!is_allowed(dom, s)) fail(ErrorKind::NotAllowedPoint, "point is not allowed in " + dom.name());
  const RayPoint p = s.normalized();

  auto label_step = [&](const SymbolSet& S, SymbolId sym) { return step(code, S, code.label(sym)); };
  auto emit = [&](const SymbolSet& S, SymbolId sym) -> std::uint32_t {
    CoverSymbol c{e_set(cover.common_future, S, sym), sym};
    auto id = cover.find(c);
    if (!id) fail(ErrorKind::InvalidArgument, "cover lacks symbol " + cover_symbol_name(dom, c));
    return *id;
  };

  // Past subset at the end of the left cycle: the limit of the decreasing
  // iteration from the full symbol set.
  SymbolSet D = dom.all_symbols();
  for (;;) {
    SymbolSet next = D;
    for (SymbolId sym : p.left_cycle) next = label_step(next, sym);
    if (next == D) break;
    D = std::move(next);
  }
  RayPoint out;
  out.origin = p.origin;
  SymbolSet S = D;
  for (SymbolId sym : p.left_cycle) {
    S = label_step(S, sym);
    out.left_cycle.push_back(emit(S, sym));
  }
  S = D;
  for (SymbolId sym : p.transient) {
    S = label_step(S, sym);
    out.transient.push_back(emit(S, sym));
  }
  std::vector<SymbolSet> round_starts;
  std::vector<std::vector<std::uint32_t>> rounds;
  for (;;) {
    auto seen = std::find(round_starts.begin(), round_starts.end(), S);
    if (seen != round_starts.end()) {
      auto r1 = static_cast<std::size_t>(seen - round_starts.begin());
      for (std::size_t r = 0; r < r1; ++r) out.transient.insert(out.transient.end(), rounds[r].begin(), rounds[r].end());
      for (std::size_t r = r1; r < rounds.size(); ++r)
        out.right_cycle.insert(out.right_cycle.end(), rounds[r].begin(), rounds[r].end());
      break;
    }
    round_starts.push_back(S);
    std::vector<std::uint32_t> round;
    for (SymbolId sym : p.right_cycle) {
      S = label_step(S, sym);
      round.push_back(emit(S, sym));
    }
    rounds.push_back(std::move(round));
  }
  return out.normalized();
}

}  // namespace symdyn

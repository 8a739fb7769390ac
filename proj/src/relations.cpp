#include "symdyn/relations.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "graph_util.hpp"
#include "symdyn/error.hpp"
#include "symdyn/spectral.hpp"

namespace symdyn {

std::string_view relation_kind_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::PairOfCode: return "pair_of_code";
    case RelationKind::Alpha: return "alpha";
    case RelationKind::Theta: return "theta";
    case RelationKind::Diagonal: return "diagonal";
    case RelationKind::Custom: return "custom";
  }
  return "custom";
}

std::string pair_name(const OneStepSft& base, SymbolId a, SymbolId b) {
  return "(" + base.symbol_name(a) + "," + base.symbol_name(b) + ")";
}

std::optional<SymbolId> RelationSft::find(SymbolId a, SymbolId b) const {
  return sft->find(pair_name(*base, a, b));
}

namespace {

RelationSft make_relation(const SftPtr& base, const std::vector<Edge>& pairs, const std::vector<Edge>& edges,
                          std::string name, RelationKind kind) {
  std::vector<std::string> names;
  for (auto [a, b] : pairs) names.push_back(pair_name(*base, a, b));
  std::vector<SymbolId> remap;
  OneStepSft sft = OneStepSft::from_indexed(std::move(name), names, edges, &remap);
  RelationSft out;
  out.base = base;
  out.kind = kind;
  out.pairs.resize(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) out.pairs[remap[k]] = pairs[k];
  out.sft = share(std::move(sft));
  return out;
}

RelationSft trimmed(const RelationSft& rel, const std::vector<bool>& keep, RelationKind kind) {
  InducedSft sub = induced(*rel.sft, keep);
  InducedSft t = trim_essential_induced(sub.sft);
  RelationSft out;
  out.base = rel.base;
  out.kind = kind;
  out.sft = share(std::move(t.sft));
  for (SymbolId s : t.to_parent) out.pairs.push_back(rel.pairs[sub.to_parent[s]]);
  return out;
}

}  // namespace

RelationSft pair_graph(const OneBlockCode& code) {
  const OneStepSft& dom = code.domain();
  const std::size_t n = dom.size();
  std::vector<Edge> pairs;
  std::vector<std::int64_t> id(n * n, -1);
  for (SymbolId a = 0; a < n; ++a)
    for (SymbolId b = 0; b < n; ++b)
      if (code.label(a) == code.label(b)) {
        id[a * n + b] = static_cast<std::int64_t>(pairs.size());
        pairs.emplace_back(a, b);
      }
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [a, b] = pairs[k];
    for (SymbolId a2 : dom.successors(a))
      for (SymbolId b2 : dom.successors(b))
        if (id[a2 * n + b2] >= 0) edges.emplace_back(static_cast<SymbolId>(k), static_cast<SymbolId>(id[a2 * n + b2]));
  }
  return make_relation(code.domain_ptr(), pairs, edges, "E(" + code.name() + ")", RelationKind::PairOfCode);
}

RelationSft pair_relation(const OneBlockCode& code) {
  RelationSft g = pair_graph(code);
  return trimmed(g, std::vector<bool>(g.sft->size(), true), RelationKind::PairOfCode);
}

RelationSft diagonal_relation(const SftPtr& base) {
  std::vector<Edge> pairs;
  for (SymbolId a = 0; a < base->size(); ++a) pairs.emplace_back(a, a);
  return make_relation(base, pairs, base->edges(), "Delta(" + base->name() + ")", RelationKind::Diagonal);
}

RelationSft restrict_relation(const RelationSft& sup, const std::function<bool(SymbolId, SymbolId)>& keep,
                              RelationKind kind) {
  std::vector<bool> mask(sup.sft->size());
  for (SymbolId k = 0; k < mask.size(); ++k) mask[k] = keep(sup.pairs[k].first, sup.pairs[k].second);
  return trimmed(sup, mask, kind);
}

UnstablePrefixLanguage unstable_prefix_language(const OneBlockCode& code, const SymbolSet& v) {
  return {v, detail::successors_of(code.domain(), v)};
}

bool ul_equal(const OneBlockCode& code, const SymbolSet& v, const SymbolSet& w) {
  if (v == w) return true;
  auto a = unstable_prefix_language(code, v);
  auto b = unstable_prefix_language(code, w);
  return !detail::separating_word(code, a.start, code, b.start).has_value();
}

RelationSft relation_e_alpha(const CoverSft& cover) {
  RelationSft pr = pair_relation(cover.base_code);
  std::map<std::pair<SymbolSet, SymbolSet>, bool> memo;
  auto keep = [&](SymbolId a, SymbolId b) {
    const SymbolSet& v = cover.symbols[a].v;
    const SymbolSet& w = cover.symbols[b].v;
    auto key = std::make_pair(std::min(v, w), std::max(v, w));
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, ul_equal(cover.code, v, w)).first;
    return it->second;
  };
  return restrict_relation(pr, keep, RelationKind::Alpha);
}

RelationSft relation_e_theta(const CoverSft& cover) {
  RelationSft pr = pair_relation(cover.base_code);
  return restrict_relation(
      pr, [&](SymbolId a, SymbolId b) { return cover.symbols[a].v == cover.symbols[b].v; }, RelationKind::Theta);
}

ForwardClosedResult forward_closed(const RelationSft& sub, const RelationSft& sup) {
  const std::size_t n = sub.sft->size();
  std::vector<SymbolId> to_sup(n);
  std::map<SymbolId, SymbolId> from_sup;
  for (SymbolId k = 0; k < n; ++k) {
    auto id = sup.find(sub.pairs[k].first, sub.pairs[k].second);
    if (!id) fail(ErrorKind::InvalidArgument, "relation " + sub.sft->name() + " is not contained in " + sup.sft->name());
    to_sup[k] = *id;
    from_sup[*id] = k;
  }
  detail::Adjacency adj = detail::adjacency(*sub.sft);
  std::vector<bool> history = detail::backward_infinite(adj);

  ForwardClosedResult out;
  for (SymbolId h = 0; h < n; ++h) {
    if (!history[h]) continue;
    for (SymbolId t : sup.sft->successors(to_sup[h])) {
      auto it = from_sup.find(t);
      if (it != from_sup.end() && sub.sft->has_edge(h, it->second)) continue;
      // Exit found: recover a sub cycle and a path from it to h.
      detail::Adjacency rev = detail::reversed(adj);
      auto [rpath, rcycle] = detail::path_to_cycle(rev, h);
      ClosureWitness w;
      w.cycle.push_back(rcycle.front());
      for (auto k = rcycle.size(); k-- > 1;) w.cycle.push_back(rcycle[k]);
      w.path.assign(rpath.rbegin(), rpath.rend());
      for (auto& s : w.cycle) s = to_sup[s];
      for (auto& s : w.path) s = to_sup[s];
      w.exit = {to_sup[h], t};
      out.closed = false;
      out.witness = std::move(w);
      return out;
    }
  }
  return out;
}

ResolvingResult resolving_check(const OneBlockCode& code, Direction dir) {
  OneBlockCode c = dir == Direction::U ? code : code.transposed();
  RelationSft sup = pair_relation(c);
  RelationSft sub = diagonal_relation(c.domain_ptr());
  ForwardClosedResult fc = forward_closed(sub, sup);
  ResolvingResult out;
  if (fc.closed) return out;
  out.resolving = false;
  const ClosureWitness& w = *fc.witness;
  detail::Adjacency adj = detail::adjacency(*sup.sft);
  auto [fpath, fcycle] = detail::path_to_cycle(adj, w.exit.second);
  std::vector<SymbolId> transient = w.path;
  transient.insert(transient.end(), fpath.begin(), fpath.end() - 1);
  auto project = [&](const std::vector<SymbolId>& seq, bool second) {
    std::vector<std::uint32_t> o;
    for (SymbolId s : seq) o.push_back(second ? sup.pairs[s].second : sup.pairs[s].first);
    return o;
  };
  const auto origin = static_cast<std::int64_t>(w.path.size());
  RayPoint t{project(w.cycle, false), project(transient, false), project(fcycle, false), origin};
  RayPoint t2{project(w.cycle, true), project(transient, true), project(fcycle, true), origin};
  if (dir == Direction::S) {
    t = t.reversed();
    t2 = t2.reversed();
  }
  out.witness = std::make_pair(t.normalized(), t2.normalized());
  return out;
}

QuotientPresentation quotient_presentation(const CoverSft& cover, RelationKind kind) {
  QuotientPresentation out;
  out.cover = cover;
  if (kind == RelationKind::Alpha)
    out.relation = relation_e_alpha(cover);
  else if (kind == RelationKind::Theta)
    out.relation = relation_e_theta(cover);
  else
    fail(ErrorKind::NonUniformRelation, "quotients are taken by the alpha or theta relation");

  const std::size_t n = cover.sft->size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : out.relation.pairs) {
    auto ra = root(a), rb = root(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  // Class ids follow the smallest member, so they are sorted by name.
  std::map<std::uint32_t, std::uint32_t> class_of_root;
  out.class_map.resize(n);
  for (std::uint32_t s = 0; s < n; ++s) {
    auto r = root(s);
    auto [it, fresh] = class_of_root.emplace(r, static_cast<std::uint32_t>(out.classes.size()));
    if (fresh) out.classes.emplace_back();
    out.class_map[s] = it->second;
    out.classes[it->second].push_back(s);
  }
  std::vector<std::string> names;
  std::vector<LetterId> labels;
  for (const auto& cls : out.classes) {
    names.push_back(cover.sft->symbol_name(cls.front()));
    LetterId l = cover.base_code.label(cls.front());
    for (SymbolId s : cls)
      if (cover.base_code.label(s) != l)
        fail(ErrorKind::NonUniformRelation, "class of " + names.back() + " mixes labels");
    labels.push_back(l);
  }
  std::set<Edge> edges;
  for (auto [a, b] : cover.sft->edges()) edges.emplace(out.class_map[a], out.class_map[b]);
  const std::string name = cover.code.name() + "/" + std::string(relation_kind_name(kind));
  std::vector<SymbolId> remap;
  auto sft = share(OneStepSft::from_indexed(name, names, {edges.begin(), edges.end()}, &remap));
  // Class names are member names in sorted order, so remap is the identity.
  std::vector<LetterId> sorted_labels(labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k) sorted_labels[remap[k]] = labels[k];
  out.code = OneBlockCode(name, sft, cover.base_code.alphabet(), std::move(sorted_labels));
  return out;
}

OneBlockCode fischer_cover(const OneBlockCode& code, std::size_t cap) {
  const OneStepSft& dom = code.domain();
  const std::size_t m = code.alphabet().size();
  const SymbolSet all = dom.all_symbols();

  // Follower-set automaton: state = set of path ends for the word read.
  std::map<SymbolSet, std::size_t> index;
  std::vector<SymbolSet> states;
  std::deque<std::size_t> queue;
  auto intern = [&](SymbolSet s) {
    auto [it, fresh] = index.emplace(s, states.size());
    if (fresh) {
      if (states.size() >= cap)
        fail(ErrorKind::StateBlowup, "follower-set construction for " + code.name() + " exceeds cap " + std::to_string(cap));
      states.push_back(std::move(s));
      queue.push_back(it->second);
    }
    return it->second;
  };
  for (LetterId a = 0; a < m; ++a) {
    SymbolSet s = detail::select(code, all, a);
    if (!s.empty()) intern(std::move(s));
  }
  std::vector<std::vector<std::int64_t>> trans;
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (LetterId a = 0; a < m; ++a) {
      SymbolSet next = detail::step(code, states[k], a);
      if (!next.empty()) intern(std::move(next));
    }
  }
  const std::size_t ns = states.size();
  trans.assign(ns, std::vector<std::int64_t>(m, -1));
  for (std::size_t k = 0; k < ns; ++k)
    for (LetterId a = 0; a < m; ++a) {
      SymbolSet next = detail::step(code, states[k], a);
      if (!next.empty()) trans[k][a] = static_cast<std::int64_t>(index.at(next));
    }

  // Moore refinement.
  std::vector<std::size_t> cls(ns, 0);
  std::size_t count = 0;
  for (;;) {
    std::map<std::vector<std::int64_t>, std::size_t> keys;
    std::vector<std::size_t> next(ns);
    for (std::size_t k = 0; k < ns; ++k) {
      std::vector<std::int64_t> key{static_cast<std::int64_t>(cls[k])};
      for (LetterId a = 0; a < m; ++a) key.push_back(trans[k][a] < 0 ? -1 : static_cast<std::int64_t>(cls[trans[k][a]]));
      next[k] = keys.emplace(key, keys.size()).first->second;
    }
    cls = std::move(next);
    if (keys.size() == count) break;
    count = keys.size();
  }

  detail::Adjacency adj(count);
  std::vector<std::vector<std::int64_t>> ctrans(count, std::vector<std::int64_t>(m, -1));
  for (std::size_t k = 0; k < ns; ++k)
    for (LetterId a = 0; a < m; ++a)
      if (trans[k][a] >= 0) ctrans[cls[k]][a] = static_cast<std::int64_t>(cls[trans[k][a]]);
  for (std::size_t c = 0; c < count; ++c)
    for (LetterId a = 0; a < m; ++a)
      if (ctrans[c][a] >= 0) adj[c].push_back(static_cast<std::uint32_t>(ctrans[c][a]));
  detail::Sccs sccs = detail::strongly_connected(adj);
  std::vector<std::size_t> terminal;
  for (std::size_t comp = 0; comp < sccs.members.size(); ++comp) {
    if (!sccs.cyclic[comp]) continue;
    bool sink = true;
    for (auto c : sccs.members[comp])
      for (auto d : adj[c]) sink = sink && sccs.component[d] == comp;
    if (sink) terminal.push_back(comp);
  }
  if (terminal.size() != 1)
    fail(ErrorKind::AmbiguousComponent, "image of " + code.name() + " is not transitive (" +
                                            std::to_string(terminal.size()) + " terminal follower components)");

  // Number the terminal states by their lexicographically least member subset.
  std::vector<std::pair<std::string, std::uint32_t>> reps;
  for (auto c : sccs.members[terminal.front()]) {
    std::string best;
    for (std::size_t k = 0; k < ns; ++k)
      if (cls[k] == c) {
        std::string nm = subset_name(dom, states[k]);
        if (best.empty() || nm < best) best = nm;
      }
    reps.emplace_back(best, c);
  }
  std::sort(reps.begin(), reps.end());
  std::map<std::uint32_t, std::size_t> rank;
  for (std::size_t r = 0; r < reps.size(); ++r) rank[reps[r].second] = r;

  std::vector<std::pair<std::uint32_t, LetterId>> vertices;
  std::map<std::pair<std::uint32_t, LetterId>, SymbolId> vid;
  for (const auto& [nm, c] : reps)
    for (LetterId a = 0; a < m; ++a)
      if (ctrans[c][a] >= 0) {
        vid[{c, a}] = static_cast<SymbolId>(vertices.size());
        vertices.emplace_back(c, a);
      }
  std::vector<std::string> names;
  std::vector<LetterId> labels;
  std::vector<Edge> edges;
  for (SymbolId v = 0; v < vertices.size(); ++v) {
    auto [c, a] = vertices[v];
    names.push_back("q" + std::to_string(rank[c]) + "_" + code.letter_name(a));
    labels.push_back(a);
    auto target = static_cast<std::uint32_t>(ctrans[c][a]);
    for (LetterId b = 0; b < m; ++b)
      if (ctrans[target][b] >= 0) edges.emplace_back(v, vid.at({target, b}));
  }
  std::vector<SymbolId> remap;
  const std::string name = "fischer(" + code.name() + ")";
  auto sft = share(OneStepSft::from_indexed(name, names, edges, &remap));
  std::vector<LetterId> sorted_labels(labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k) sorted_labels[remap[k]] = labels[k];
  return OneBlockCode(name, sft, code.alphabet(), std::move(sorted_labels));
}

OneBlockCode alpha_extension(const OneBlockCode& code, std::size_t cap) {
  QuotientPresentation q = quotient_presentation(build_cover(code, cap), RelationKind::Alpha);
  return restrict_to_max_entropy(q.code).renamed(code.name() + "/alpha");
}

}  // namespace symdyn

#include "symdyn/degree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "graph_util.hpp"
#include "symdyn/error.hpp"
#include "symdyn/relations.hpp"
#include "symdyn/spectral.hpp"

namespace symdyn {

namespace {

constexpr std::size_t kWordEnumerationCap = 200000;

bool is_diagonal(const RelationSft& g, SymbolId p) { return g.pairs[p].first == g.pairs[p].second; }

// Shortest path from `from` to the nearest node satisfying `goal`.
template <class Goal>
std::vector<std::uint32_t> path_to(const detail::Adjacency& adj, std::uint32_t from, Goal goal) {
  constexpr std::uint32_t kNone = UINT32_MAX;
  std::vector<std::uint32_t> parent(adj.size(), kNone);
  std::vector<bool> seen(adj.size(), false);
  std::deque<std::uint32_t> queue{from};
  seen[from] = true;
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    if (v != from && goal(v)) {
      std::vector<std::uint32_t> path;
      for (std::uint32_t c = v; c != kNone; c = parent[c]) path.push_back(c);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (std::uint32_t w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        queue.push_back(w);
      }
  }
  return {};
}

std::vector<bool> reachable_from(const detail::Adjacency& adj, const std::vector<std::uint32_t>& sources) {
  // Nodes reachable by a path of at least one edge.
  std::vector<bool> seen(adj.size(), false);
  std::deque<std::uint32_t> queue;
  for (auto s : sources)
    for (auto w : adj[s])
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
  }
  return seen;
}

// Left-infinite history ending at `node`: {cycle, path from cycle[0] to node}.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> history_of(const detail::Adjacency& adj,
                                                                             std::uint32_t node) {
  detail::Adjacency rev = detail::reversed(adj);
  auto [rpath, rcycle] = detail::path_to_cycle(rev, node);
  std::vector<std::uint32_t> cycle{rcycle.front()};
  for (auto k = rcycle.size(); k-- > 1;) cycle.push_back(rcycle[k]);
  return {cycle, {rpath.rbegin(), rpath.rend()}};
}

std::vector<LetterId> least_rotation(const std::vector<LetterId>& w) {
  std::vector<LetterId> best = w, cur = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    best = std::min(best, cur);
  }
  return best;
}

}  // namespace

FiniteToOneResult finite_to_one_check(const OneBlockCode& code) {
  RelationSft g = pair_graph(code);
  detail::Adjacency adj = detail::adjacency(*g.sft);
  std::vector<std::uint32_t> diag;
  for (SymbolId p = 0; p < g.sft->size(); ++p)
    if (is_diagonal(g, p)) diag.push_back(p);
  std::vector<bool> from_diag = reachable_from(adj, diag);
  std::vector<bool> to_diag = reachable_from(detail::reversed(adj), diag);
  FiniteToOneResult out;
  for (SymbolId p = 0; p < g.sft->size(); ++p) {
    if (is_diagonal(g, p) || !from_diag[p] || !to_diag[p]) continue;
    auto head = detail::shortest_path(adj, diag, p);
    auto tail = path_to(adj, p, [&](std::uint32_t v) { return is_diagonal(g, v); });
    head.insert(head.end(), tail.begin() + 1, tail.end());
    Diamond dmd;
    for (auto s : head) {
      dmd.top.push_back(g.pairs[s].first);
      dmd.bottom.push_back(g.pairs[s].second);
    }
    out.finite_to_one = false;
    out.witness = std::move(dmd);
    return out;
  }
  return out;
}

// ------------------------------------------------------------------ relatedness

Relatedness::Relatedness(const OneBlockCode& code) : code_(code), n_(code.domain().size()) {
  const OneStepSft& dom = code.domain();
  ids_.assign(n_ * n_, -1);
  std::vector<Edge> pairs;
  for (SymbolId a = 0; a < n_; ++a)
    for (SymbolId b = 0; b < n_; ++b)
      if (code.label(a) == code.label(b)) {
        ids_[a * n_ + b] = static_cast<std::int64_t>(pairs.size());
        pairs.emplace_back(a, b);
      }
  pair_count_ = pairs.size();
  edge_.assign(pair_count_, std::vector<bool>(pair_count_, false));
  detail::Adjacency adj(pair_count_);
  for (std::size_t k = 0; k < pair_count_; ++k) {
    auto [a, b] = pairs[k];
    for (SymbolId a2 : dom.successors(a))
      for (SymbolId b2 : dom.successors(b)) {
        auto id = pair_id(a2, b2);
        if (id < 0) continue;
        edge_[k][static_cast<std::size_t>(id)] = true;
        adj[k].push_back(static_cast<std::uint32_t>(id));
      }
  }
  past_ = detail::backward_infinite(adj);
  future_ = detail::forward_infinite(adj);
}

bool Relatedness::related(std::span<const SymbolId> w, std::span<const SymbolId> v) const {
  if (w.size() != v.size()) return false;
  if (w.empty()) return true;
  std::int64_t prev = -1;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k] >= n_ || v[k] >= n_) return false;
    auto id = pair_id(w[k], v[k]);
    if (id < 0) return false;
    if (k == 0 && !past_[static_cast<std::size_t>(id)]) return false;
    if (k > 0 && !edge_[static_cast<std::size_t>(prev)][static_cast<std::size_t>(id)]) return false;
    prev = id;
  }
  return future_[static_cast<std::size_t>(prev)];
}

std::vector<std::vector<SymbolId>> Relatedness::related_words(std::span<const SymbolId> seed) const {
  std::vector<std::vector<SymbolId>> out;
  if (seed.empty()) return {{}};
  std::vector<SymbolId> word;
  auto rec = [&](auto&& self, std::int64_t prev) -> void {
    const std::size_t k = word.size();
    if (k == seed.size()) {
      if (future_[static_cast<std::size_t>(prev)]) out.push_back(word);
      return;
    }
    for (SymbolId s = 0; s < n_; ++s) {
      auto id = pair_id(seed[k], s);
      if (id < 0) continue;
      if (k == 0 && !past_[static_cast<std::size_t>(id)]) continue;
      if (k > 0 && !edge_[static_cast<std::size_t>(prev)][static_cast<std::size_t>(id)]) continue;
      word.push_back(s);
      self(self, id);
      word.pop_back();
    }
  };
  rec(rec, -1);
  return out;
}

bool words_related(const OneBlockCode& code, const Word& w, const Word& v) {
  if (w.size() != v.size() || w.start != v.start)
    fail(ErrorKind::WindowMismatch, "related words must share a window");
  return Relatedness(code).related(w.items, v.items);
}

std::size_t default_k_cap(const OneBlockCode& code) {
  std::size_t pairs = Relatedness(code).pair_count();
  return std::max<std::size_t>(1, pairs * pairs);
}

std::size_t magic_constant(const OneBlockCode& code, std::optional<std::size_t> cap) {
  Relatedness rel(code);
  const std::size_t limit = cap.value_or(std::max<std::size_t>(1, rel.pair_count() * rel.pair_count()));
  for (std::size_t K = 1; K <= limit; ++K) {
    auto words = enumerate_words(code.domain(), K);
    if (words.size() > kWordEnumerationCap)
      fail(ErrorKind::CapExceeded, "magic constant search for " + code.name() + " enumerates more than " +
                                       std::to_string(kWordEnumerationCap) + " words at length " + std::to_string(K));
    std::map<std::vector<LetterId>, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < words.size(); ++k) {
      std::vector<LetterId> label;
      for (SymbolId s : words[k]) label.push_back(code.label(s));
      groups[label].push_back(k);
    }
    bool transitive = true;
    for (const auto& [label, members] : groups) {
      const std::size_t g = members.size();
      std::vector<std::vector<bool>> r(g, std::vector<bool>(g));
      for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) r[i][j] = rel.related(words[members[i]], words[members[j]]);
      for (std::size_t i = 0; i < g && transitive; ++i)
        for (std::size_t j = 0; j < g && transitive; ++j) {
          if (!r[i][j]) continue;
          for (std::size_t k = 0; k < g; ++k)
            if (r[j][k] && !r[i][k]) {
              transitive = false;
              break;
            }
        }
      if (!transitive) break;
    }
    if (transitive) return K;
  }
  fail(ErrorKind::CapExceeded, "no magic constant for " + code.name() + " up to cap " + std::to_string(limit));
}

// -------------------------------------------------------------------- families

std::size_t RelatedWordFamily::degree() const {
  if (degrees_by_column.empty()) return 0;
  return *std::min_element(degrees_by_column.begin(), degrees_by_column.end());
}

std::int64_t RelatedWordFamily::magic_column() const {
  auto it = std::min_element(degrees_by_column.begin(), degrees_by_column.end());
  return m + static_cast<std::int64_t>(it - degrees_by_column.begin());
}

namespace {

RelatedWordFamily family_of(const Relatedness& rel, const Word& seed, std::int64_t m, std::int64_t n) {
  RelatedWordFamily fam;
  fam.m = m;
  fam.n = n;
  fam.seed = seed;
  for (auto& w : rel.related_words(seed.items)) fam.members.push_back({std::move(w), m});
  const auto width = static_cast<std::size_t>(n - m + 1);
  fam.degrees_by_column.assign(width, 0);
  for (std::size_t j = 0; j < width; ++j) {
    std::set<SymbolId> column;
    for (const auto& w : fam.members) column.insert(w.items[j]);
    fam.degrees_by_column[j] = column.size();
  }
  return fam;
}

}  // namespace

RelatedWordFamily related_family(const OneBlockCode& code, const Word& seed, std::int64_t m, std::int64_t n,
                                 std::size_t K) {
  const auto k = static_cast<std::int64_t>(K);
  if (m > -k || n < k)
    fail(ErrorKind::WindowTooSmall, "window [" + std::to_string(m) + "," + std::to_string(n) + "] does not contain [-" +
                                        std::to_string(K) + "," + std::to_string(K) + "]");
  if (seed.start != m || static_cast<std::int64_t>(seed.size()) != n - m + 1)
    fail(ErrorKind::WindowMismatch, "seed does not span the window");
  Relatedness rel(code);
  if (!rel.related(seed.items, seed.items))
    fail(ErrorKind::InvalidArgument, "seed is not a bi-extendable word of " + code.domain().name());
  return family_of(rel, seed, m, n);
}

DegreeResult degree(const OneBlockCode& code, std::optional<std::size_t> k_cap, std::optional<std::size_t> radius) {
  DegreeResult out;
  out.K = magic_constant(code, k_cap);
  out.radius = radius.value_or(out.K);
  if (out.radius < out.K) fail(ErrorKind::WindowTooSmall, "degree radius below K");
  const auto r = static_cast<std::int64_t>(out.radius);
  Relatedness rel(code);
  auto seeds = enumerate_words(code.domain(), 2 * out.radius + 1);
  if (seeds.size() > kWordEnumerationCap)
    fail(ErrorKind::CapExceeded, "degree search for " + code.name() + " has too many seeds");
  bool first = true;
  for (auto& s : seeds) {
    if (!rel.related(s, s)) continue;
    RelatedWordFamily fam = family_of(rel, Word{s, -r}, -r, r);
    if (first || fam.degree() < out.d) {
      out.d = fam.degree();
      out.family = std::move(fam);
      first = false;
    }
  }
  if (first) fail(ErrorKind::EmptyShift, code.domain().name() + " has no bi-extendable words");
  return out;
}

bool MagicPermutation::is_identity() const {
  return std::all_of(mapping.begin(), mapping.end(), [](const auto& p) { return p.first == p.second; });
}

MagicPermutation magic_permutation(const OneBlockCode& code, const RelatedWordFamily& family, std::size_t K,
                                   std::optional<std::vector<SymbolId>> u) {
  const OneStepSft& dom = code.domain();
  const auto& w = family.seed.items;
  if (w.empty()) fail(ErrorKind::InvalidArgument, "empty family seed");
  if (!u) {
    detail::Adjacency adj = detail::adjacency(dom);
    std::optional<std::vector<SymbolId>> best;
    for (SymbolId s : dom.successors(w.back())) {
      auto path = detail::shortest_path(adj, {s}, w.front());
      if (path.empty()) continue;
      std::vector<SymbolId> cand(path.begin(), path.end() - 1);
      if (!best || cand.size() < best->size() || (cand.size() == best->size() && cand < *best)) best = cand;
    }
    if (!best) fail(ErrorKind::InvalidArgument, "seed cannot be followed by itself in " + dom.name());
    u = std::move(best);
  }
  std::vector<SymbolId> big = w;
  big.insert(big.end(), u->begin(), u->end());
  big.insert(big.end(), w.begin(), w.end());
  if (!accepts(dom, big)) fail(ErrorKind::InvalidArgument, "connecting word does not join the seed to itself");

  const std::int64_t m = family.m;
  const std::int64_t n2 = m + static_cast<std::int64_t>(big.size()) - 1;
  RelatedWordFamily fam2 = related_family(code, Word{big, m}, m, n2, K);

  MagicPermutation out;
  out.u = *u;
  out.from_column = family.magic_column();
  out.to_column = out.from_column + static_cast<std::int64_t>(w.size() + u->size());
  const auto c1 = static_cast<std::size_t>(out.from_column - m);
  const auto c2 = static_cast<std::size_t>(out.to_column - m);
  std::map<SymbolId, std::set<std::vector<SymbolId>>> middles;
  std::set<SymbolId> targets;
  for (const auto& mem : fam2.members) {
    middles[mem.items[c1]].insert(std::vector<SymbolId>(mem.items.begin() + static_cast<std::ptrdiff_t>(c1),
                                                        mem.items.begin() + static_cast<std::ptrdiff_t>(c2 + 1)));
    targets.insert(mem.items[c2]);
  }
  std::set<SymbolId> images;
  for (const auto& [a, vs] : middles) {
    if (vs.size() != 1)
      fail(ErrorKind::NonUniqueV, "symbol " + dom.symbol_name(a) + " continues along " + std::to_string(vs.size()) +
                                      " words between the magic columns");
    SymbolId b = vs.begin()->back();
    out.mapping.emplace_back(a, b);
    images.insert(b);
  }
  const std::size_t d = family.degree();
  if (middles.size() != d || images.size() != d || images != targets)
    fail(ErrorKind::NotPermutation, "magic-column map is not a permutation of " + std::to_string(d) + " symbols");
  return out;
}

// ------------------------------------------------------------------ D and d = D

// A domain point over w^inf may have a period that is a proper multiple of
// |w|, so search label words directly. rel[a] holds the b reachable from a by
// reading w once and stepping on to the next copy; w^inf is in the image iff
// that relation has a cycle.
std::vector<std::vector<LetterId>> image_necklaces(const OneBlockCode& code, std::size_t n) {
  const OneStepSft& d = code.domain();
  const std::size_t N = d.size();
  using Rel = std::vector<std::vector<bool>>;
  std::vector<std::vector<LetterId>> out;
  std::vector<LetterId> w;
  auto has_cycle = [&](Rel r) {
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t i = 0; i < N; ++i)
        if (r[i][k])
          for (std::size_t j = 0; j < N; ++j)
            if (r[k][j]) r[i][j] = true;
    for (std::size_t i = 0; i < N; ++i)
      if (r[i][i]) return true;
    return false;
  };
  // cur[a][x]: some path from a reads w so far and ends at x.
  auto rec = [&](auto&& self, const Rel& cur) -> void {
    if (w.size() == n) {
      if (detail::primitive_root(w).size() != n || least_rotation(w) != w) return;
      Rel r(N, std::vector<bool>(N, false));
      for (SymbolId a = 0; a < N; ++a)
        for (SymbolId x = 0; x < N; ++x)
          if (cur[a][x])
            for (SymbolId b : d.successors(x))
              if (code.label(b) == w[0]) r[a][b] = true;
      if (has_cycle(r)) out.push_back(w);
      return;
    }
    for (LetterId l = 0; l < code.alphabet().size(); ++l) {
      Rel next(N, std::vector<bool>(N, false));
      bool any = false;
      for (SymbolId a = 0; a < N; ++a)
        for (SymbolId x = 0; x < N; ++x) {
          if (w.empty()) {
            if (a == x && code.label(a) == l) next[a][x] = any = true;
            continue;
          }
          if (!cur[a][x]) continue;
          for (SymbolId y : d.successors(x))
            if (code.label(y) == l) next[a][y] = any = true;
        }
      if (!any) continue;
      w.push_back(l);
      self(self, next);
      w.pop_back();
    }
  };
  rec(rec, Rel(N, std::vector<bool>(N, false)));
  return out;
}

PreimageMinimum min_periodic_preimages(const OneBlockCode& code, std::uint32_t P) {
  PreimageMinimum out;
  bool first = true;
  for (std::size_t n = 1; n <= P; ++n)
    for (const auto& c : image_necklaces(code, n)) {
      RayPoint y = RayPoint::periodic(c);
      std::uint64_t count = preimage_count(code, y);
      ++out.points_checked;
      if (first || count < out.D) {
        out.D = count;
        out.point = y.normalized();
        first = false;
      }
    }
  if (first) fail(ErrorKind::EmptyShift, "image of " + code.name() + " has no periodic points of period <= " +
                                             std::to_string(P));
  return out;
}

MagicData verify_d_equals_D(const OneBlockCode& code, std::uint32_t P, std::optional<std::size_t> k_cap) {
  FiniteToOneResult fto = finite_to_one_check(code);
  if (!fto.finite_to_one)
    fail(ErrorKind::NotFiniteToOne, code.name() + " has a diamond " + word_string(code.domain().symbol_names(), fto.witness->top) +
                                        " / " + word_string(code.domain().symbol_names(), fto.witness->bottom));
  MagicData out;
  out.P = P;
  DegreeResult deg = degree(code, k_cap);
  PreimageMinimum pm = min_periodic_preimages(code, P);
  // A wider window can only sharpen d; widen a little before reporting.
  for (std::size_t r = deg.K + 1; deg.d != pm.D && r <= deg.K + 4; ++r) deg = degree(code, k_cap, r);
  if (deg.d != pm.D)
    fail(ErrorKind::Mismatch, "d=" + std::to_string(deg.d) + " D=" + std::to_string(pm.D) + " (P=" + std::to_string(P) +
                                  ", radius " + std::to_string(deg.radius) + ")");
  out.K = deg.K;
  out.d = deg.d;
  out.D = pm.D;
  out.radius = deg.radius;
  out.minimizing_point = pm.point;
  out.permutation = magic_permutation(code, deg.family, deg.K);
  out.family = std::move(deg.family);
  return out;
}

std::optional<StableCollision> stable_collision(const OneBlockCode& code) {
  RelationSft g = pair_graph(code);
  detail::Adjacency adj = detail::adjacency(*g.sft);
  std::vector<bool> past = detail::backward_infinite(adj);
  std::vector<std::uint32_t> diag;
  for (SymbolId p = 0; p < g.sft->size(); ++p)
    if (is_diagonal(g, p)) diag.push_back(p);
  std::vector<bool> to_diag = reachable_from(detail::reversed(adj), diag);
  detail::Adjacency dom_adj = detail::adjacency(code.domain());
  for (SymbolId p = 0; p < g.sft->size(); ++p) {
    if (is_diagonal(g, p) || !past[p] || !to_diag[p]) continue;
    auto [cycle, head] = history_of(adj, p);
    auto tail = path_to(adj, p, [&](std::uint32_t v) { return is_diagonal(g, v); });
    const SymbolId q = g.pairs[tail.back()].first;
    auto [dpath, dcycle] = detail::path_to_cycle(dom_adj, q);
    std::vector<std::uint32_t> firsts, seconds, lf, ls;
    for (auto s : cycle) {
      lf.push_back(g.pairs[s].first);
      ls.push_back(g.pairs[s].second);
    }
    auto add = [&](std::uint32_t s) {
      firsts.push_back(g.pairs[s].first);
      seconds.push_back(g.pairs[s].second);
    };
    for (auto s : head) add(s);
    for (std::size_t k = 1; k < tail.size(); ++k) add(tail[k]);
    for (std::size_t k = 1; k + 1 < dpath.size(); ++k) {
      firsts.push_back(dpath[k]);
      seconds.push_back(dpath[k]);
    }
    // The right cycle starts right after q, or at dpath.back() when q is off the cycle.
    std::vector<std::uint32_t> rc(dcycle.begin(), dcycle.end());
    if (dpath.size() == 1) std::rotate(rc.begin(), rc.begin() + 1, rc.end());
    const auto origin = static_cast<std::int64_t>(head.size()) - 1;
    StableCollision sc{RayPoint{lf, firsts, rc, origin}.normalized(), RayPoint{ls, seconds, rc, origin}.normalized()};
    return sc;
  }
  return std::nullopt;
}

}  // namespace symdyn

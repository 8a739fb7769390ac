#include "symdyn/shift.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

#include "graph_util.hpp"
#include "symdyn/error.hpp"

namespace symdyn {

namespace {

void sort_unique(std::vector<SymbolId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool all_single_char(const std::vector<std::string>& names) {
  return std::all_of(names.begin(), names.end(), [](const std::string& s) { return s.size() == 1; });
}

}  // namespace

// ---------------------------------------------------------------- OneStepSft

OneStepSft OneStepSft::from_names(std::string name, std::vector<std::string> symbols,
                                  const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<std::string> sorted = symbols;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) fail(ErrorKind::InvalidArgument, "duplicate symbol '" + sorted[i] + "'");
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  auto index_of = [&](const std::string& s) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), s);
    if (it == sorted.end() || *it != s) fail(ErrorKind::UnknownName, "edge references undeclared symbol '" + s + "'");
    return static_cast<SymbolId>(it - sorted.begin());
  };
  for (const auto& [a, b] : edges) indexed.emplace_back(index_of(a), index_of(b));
  return from_indexed(std::move(name), std::move(sorted), indexed);
}

OneStepSft OneStepSft::from_indexed(std::string name, std::vector<std::string> symbols,
                                    const std::vector<Edge>& edges, std::vector<SymbolId>* old_to_new) {
  const std::size_t n = symbols.size();
  std::vector<SymbolId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](SymbolId a, SymbolId b) { return symbols[a] < symbols[b]; });
  std::vector<SymbolId> remap(n);
  OneStepSft out;
  out.name_ = std::move(name);
  out.symbols_.resize(n);
  for (SymbolId k = 0; k < n; ++k) {
    remap[order[k]] = k;
    out.symbols_[k] = symbols[order[k]];
  }
  for (std::size_t k = 1; k < n; ++k)
    if (out.symbols_[k] == out.symbols_[k - 1])
      fail(ErrorKind::InvalidArgument, "duplicate symbol '" + out.symbols_[k] + "'");
  out.succ_.assign(n, {});
  out.pred_.assign(n, {});
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) fail(ErrorKind::InvalidArgument, "edge endpoint out of range");
    out.succ_[remap[a]].push_back(remap[b]);
    out.pred_[remap[b]].push_back(remap[a]);
  }
  for (auto& s : out.succ_) sort_unique(s);
  for (auto& p : out.pred_) sort_unique(p);
  if (old_to_new) *old_to_new = remap;
  return out;
}

std::optional<SymbolId> OneStepSft::find(std::string_view symbol) const {
  auto it = std::lower_bound(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end() || *it != symbol) return std::nullopt;
  return static_cast<SymbolId>(it - symbols_.begin());
}

SymbolId OneStepSft::at(std::string_view symbol) const {
  auto id = find(symbol);
  if (!id) fail(ErrorKind::UnknownName, "symbol '" + std::string(symbol) + "' not in " + name_);
  return *id;
}

bool OneStepSft::has_edge(SymbolId from, SymbolId to) const {
  const auto& s = succ_.at(from);
  return std::binary_search(s.begin(), s.end(), to);
}

std::size_t OneStepSft::edge_count() const {
  std::size_t n = 0;
  for (const auto& s : succ_) n += s.size();
  return n;
}

std::vector<Edge> OneStepSft::edges() const {
  std::vector<Edge> out;
  for (SymbolId a = 0; a < succ_.size(); ++a)
    for (SymbolId b : succ_[a]) out.emplace_back(a, b);
  return out;
}

bool OneStepSft::is_essential() const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (succ_[i].empty() || pred_[i].empty()) return false;
  return true;
}

SymbolSet OneStepSft::all_symbols() const {
  SymbolSet out(symbols_.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

OneStepSft OneStepSft::renamed(std::string name) const {
  OneStepSft out = *this;
  out.name_ = std::move(name);
  return out;
}

OneStepSft OneStepSft::transposed() const {
  OneStepSft out = *this;
  std::swap(out.succ_, out.pred_);
  return out;
}

InducedSft induced(const OneStepSft& sft, const std::vector<bool>& keep, std::string name) {
  InducedSft out;
  out.from_parent.assign(sft.size(), std::nullopt);
  std::vector<std::string> names;
  for (SymbolId s = 0; s < sft.size(); ++s) {
    if (!keep.at(s)) continue;
    out.from_parent[s] = static_cast<SymbolId>(out.to_parent.size());
    out.to_parent.push_back(s);
    names.push_back(sft.symbol_name(s));
  }
  std::vector<Edge> edges;
  for (auto [a, b] : sft.edges())
    if (keep[a] && keep[b]) edges.emplace_back(*out.from_parent[a], *out.from_parent[b]);
  out.sft = OneStepSft::from_indexed(name.empty() ? sft.name() : std::move(name), std::move(names), edges);
  return out;
}

InducedSft trim_essential_induced(const OneStepSft& sft) {
  const std::size_t n = sft.size();
  std::vector<bool> keep(n, true);
  std::vector<std::size_t> indeg(n), outdeg(n);
  std::vector<SymbolId> queue;
  for (SymbolId s = 0; s < n; ++s) {
    indeg[s] = sft.predecessors(s).size();
    outdeg[s] = sft.successors(s).size();
    if (indeg[s] == 0 || outdeg[s] == 0) {
      keep[s] = false;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    SymbolId s = queue.back();
    queue.pop_back();
    for (SymbolId t : sft.successors(s))
      if (keep[t] && --indeg[t] == 0) {
        keep[t] = false;
        queue.push_back(t);
      }
    for (SymbolId p : sft.predecessors(s))
      if (keep[p] && --outdeg[p] == 0) {
        keep[p] = false;
        queue.push_back(p);
      }
  }
  if (std::none_of(keep.begin(), keep.end(), [](bool b) { return b; }))
    fail(ErrorKind::EmptyShift, "no symbol of " + sft.name() + " lies on a bi-infinite path");
  return induced(sft, keep);
}

OneStepSft trim_essential(const OneStepSft& sft) { return trim_essential_induced(sft).sft; }

// --------------------------------------------------------------- OneBlockCode

OneBlockCode::OneBlockCode(std::string name, SftPtr domain, std::vector<std::string> alphabet,
                           std::vector<LetterId> labels)
    : name_(std::move(name)), domain_(std::move(domain)) {
  if (!domain_) fail(ErrorKind::InvalidArgument, "code without domain");
  if (labels.size() != domain_->size())
    fail(ErrorKind::PartialBlockMap, "code " + name_ + " labels " + std::to_string(labels.size()) + " of " +
                                         std::to_string(domain_->size()) + " symbols");
  std::vector<std::string> sorted = alphabet;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  labels_.reserve(labels.size());
  for (LetterId l : labels) {
    if (l >= alphabet.size()) fail(ErrorKind::InvalidArgument, "label out of range in code " + name_);
    auto it = std::lower_bound(sorted.begin(), sorted.end(), alphabet[l]);
    labels_.push_back(static_cast<LetterId>(it - sorted.begin()));
  }
  alphabet_ = std::move(sorted);
}

OneBlockCode OneBlockCode::from_names(std::string name, SftPtr domain, std::vector<std::string> alphabet,
                                      const std::map<std::string, std::string>& mapping) {
  std::sort(alphabet.begin(), alphabet.end());
  for (std::size_t i = 1; i < alphabet.size(); ++i)
    if (alphabet[i] == alphabet[i - 1]) fail(ErrorKind::InvalidArgument, "duplicate letter '" + alphabet[i] + "'");
  std::vector<LetterId> labels(domain->size());
  std::vector<bool> seen(domain->size(), false);
  for (const auto& [sym, letter] : mapping) {
    SymbolId s = domain->at(sym);
    auto it = std::lower_bound(alphabet.begin(), alphabet.end(), letter);
    if (it == alphabet.end() || *it != letter)
      fail(ErrorKind::AlphabetMismatch, "letter '" + letter + "' not in alphabet of code " + name);
    labels[s] = static_cast<LetterId>(it - alphabet.begin());
    seen[s] = true;
  }
  for (SymbolId s = 0; s < domain->size(); ++s)
    if (!seen[s]) fail(ErrorKind::PartialBlockMap, "code " + name + " has no label for '" + domain->symbol_name(s) + "'");
  return OneBlockCode(std::move(name), std::move(domain), std::move(alphabet), std::move(labels));
}

OneBlockCode OneBlockCode::identity(SftPtr domain, std::string name) {
  std::vector<LetterId> labels(domain->size());
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<std::string> alphabet = domain->symbol_names();
  if (name.empty()) name = "ID(" + domain->name() + ")";
  return OneBlockCode(std::move(name), std::move(domain), std::move(alphabet), std::move(labels));
}

std::optional<LetterId> OneBlockCode::find_letter(std::string_view letter) const {
  auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), letter);
  if (it == alphabet_.end() || *it != letter) return std::nullopt;
  return static_cast<LetterId>(it - alphabet_.begin());
}

OneBlockCode OneBlockCode::renamed(std::string name) const {
  OneBlockCode out = *this;
  out.name_ = std::move(name);
  return out;
}

OneBlockCode OneBlockCode::transposed() const {
  OneBlockCode out = *this;
  out.domain_ = share(domain_->transposed());
  return out;
}

OneBlockCode OneBlockCode::restricted(const InducedSft& sub) const {
  std::vector<LetterId> labels;
  labels.reserve(sub.to_parent.size());
  for (SymbolId p : sub.to_parent) labels.push_back(labels_.at(p));
  return OneBlockCode(name_, share(sub.sft), alphabet_, std::move(labels));
}

// ----------------------------------------------------------- SlidingBlockCode

SlidingBlockCode SlidingBlockCode::from_one_block(const OneBlockCode& code) {
  SlidingBlockCode out;
  out.name = code.name();
  out.domain = code.domain_ptr();
  out.alphabet = code.alphabet();
  for (SymbolId s = 0; s < code.domain().size(); ++s) out.table[{s}] = code.label(s);
  return out;
}

std::vector<LetterId> SlidingBlockCode::apply(std::span<const SymbolId> word) const {
  std::vector<LetterId> out;
  const std::size_t w = window();
  if (word.size() < w) return out;
  for (std::size_t k = 0; k + w <= word.size(); ++k) {
    std::vector<SymbolId> block(word.begin() + static_cast<std::ptrdiff_t>(k),
                                word.begin() + static_cast<std::ptrdiff_t>(k + w));
    auto it = table.find(block);
    if (it == table.end()) fail(ErrorKind::PartialBlockMap, "block map " + name + " undefined on a window");
    out.push_back(it->second);
  }
  return out;
}

// ------------------------------------------------------------------- RayPoint

RayPoint RayPoint::periodic(std::vector<std::uint32_t> cycle, std::int64_t origin) {
  RayPoint p;
  p.left_cycle = cycle;
  p.right_cycle = std::move(cycle);
  p.origin = origin;
  return p;
}

std::uint32_t RayPoint::at(std::int64_t k) const {
  const std::int64_t b = k + origin;
  const auto nt = static_cast<std::int64_t>(transient.size());
  if (b < 0) {
    const auto nl = static_cast<std::int64_t>(left_cycle.size());
    return left_cycle[static_cast<std::size_t>(((b % nl) + nl) % nl)];
  }
  if (b < nt) return transient[static_cast<std::size_t>(b)];
  const auto nr = static_cast<std::int64_t>(right_cycle.size());
  return right_cycle[static_cast<std::size_t>((b - nt) % nr)];
}

std::vector<std::uint32_t> RayPoint::window(std::int64_t from, std::int64_t to) const {
  std::vector<std::uint32_t> out;
  for (std::int64_t k = from; k < to; ++k) out.push_back(at(k));
  return out;
}

RayPoint RayPoint::shifted(std::int64_t k) const {
  RayPoint p = *this;
  p.origin += k;
  return p;
}

RayPoint RayPoint::reversed() const {
  RayPoint p;
  p.left_cycle.assign(right_cycle.rbegin(), right_cycle.rend());
  p.right_cycle.assign(left_cycle.rbegin(), left_cycle.rend());
  p.transient.assign(transient.rbegin(), transient.rend());
  p.origin = static_cast<std::int64_t>(transient.size()) - 1 - origin;
  return p;
}

RayPoint RayPoint::normalized() const {
  if (left_cycle.empty() || right_cycle.empty()) fail(ErrorKind::InvalidArgument, "point with empty cycle");
  RayPoint p = *this;
  p.left_cycle = detail::primitive_root(p.left_cycle);
  p.right_cycle = detail::primitive_root(p.right_cycle);
  auto& L = p.left_cycle;
  auto& T = p.transient;
  auto& R = p.right_cycle;
  while (!T.empty() && T.back() == R.back()) {
    std::rotate(R.rbegin(), R.rbegin() + 1, R.rend());
    T.pop_back();
  }
  while (!T.empty() && T.front() == L.front()) {
    std::rotate(L.begin(), L.begin() + 1, L.end());
    T.erase(T.begin());
    p.origin -= 1;
  }
  if (T.empty()) {
    const std::size_t bound = L.size() * R.size() + 1;
    for (std::size_t k = 0; k < bound && L != R && L.front() == R.front(); ++k) {
      std::rotate(L.begin(), L.begin() + 1, L.end());
      std::rotate(R.begin(), R.begin() + 1, R.end());
      p.origin -= 1;
    }
    if (L == R) {
      // Periodic: the cycle is read from coordinate 0.
      auto cycle = p.window(0, static_cast<std::int64_t>(R.size()));
      return periodic(std::move(cycle), 0);
    }
  }
  return p;
}

bool RayPoint::is_periodic() const {
  RayPoint n = normalized();
  return n.transient.empty() && n.left_cycle == n.right_cycle;
}

bool operator==(const RayPoint& a, const RayPoint& b) {
  RayPoint x = a.normalized(), y = b.normalized();
  return x.left_cycle == y.left_cycle && x.transient == y.transient && x.right_cycle == y.right_cycle &&
         x.origin == y.origin;
}

bool is_allowed(const OneStepSft& sft, const RayPoint& point) {
  if (point.left_cycle.empty() || point.right_cycle.empty()) return false;
  std::vector<std::uint32_t> seq;
  // Two copies of L, then T, then two copies of R cover every junction.
  seq.insert(seq.end(), point.left_cycle.begin(), point.left_cycle.end());
  seq.insert(seq.end(), point.left_cycle.begin(), point.left_cycle.end());
  seq.insert(seq.end(), point.transient.begin(), point.transient.end());
  seq.insert(seq.end(), point.right_cycle.begin(), point.right_cycle.end());
  seq.insert(seq.end(), point.right_cycle.begin(), point.right_cycle.end());
  for (auto s : seq)
    if (s >= sft.size()) return false;
  for (std::size_t k = 0; k + 1 < seq.size(); ++k)
    if (!sft.has_edge(seq[k], seq[k + 1])) return false;
  return true;
}

// -------------------------------------------------------- higher blocks, recode

HigherBlock higher_block(const OneStepSft& sft, std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "block length must be positive");
  std::vector<std::vector<SymbolId>> blocks = enumerate_words(sft, n);
  const bool compact = all_single_char(sft.symbol_names());
  std::vector<std::string> names;
  names.reserve(blocks.size());
  for (const auto& b : blocks) {
    std::string name;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k > 0 && !compact) name += '.';
      name += sft.symbol_name(b[k]);
    }
    names.push_back(std::move(name));
  }
  std::map<std::vector<SymbolId>, SymbolId> index;
  for (SymbolId k = 0; k < blocks.size(); ++k) index[blocks[k]] = k;
  std::vector<Edge> edges;
  for (SymbolId k = 0; k < blocks.size(); ++k) {
    std::vector<SymbolId> next(blocks[k].begin() + 1, blocks[k].end());
    for (SymbolId t : sft.successors(blocks[k].back())) {
      next.push_back(t);
      if (auto it = index.find(next); it != index.end()) edges.emplace_back(k, it->second);
      next.pop_back();
    }
  }
  std::vector<SymbolId> remap;
  std::string name = n == 1 ? sft.name() : sft.name() + "^[" + std::to_string(n) + "]";
  OneStepSft out = OneStepSft::from_indexed(name, names, edges, &remap);
  HigherBlock hb;
  hb.blocks.resize(blocks.size());
  for (SymbolId k = 0; k < blocks.size(); ++k) hb.blocks[remap[k]] = blocks[k];
  hb.sft = share(std::move(out));
  std::vector<LetterId> labels;
  for (const auto& b : hb.blocks) labels.push_back(b.front());
  hb.conjugacy = OneBlockCode("first", hb.sft, sft.symbol_names(), labels);
  return hb;
}

Recoded recode_one_block(const SlidingBlockCode& code) {
  if (!code.domain) fail(ErrorKind::InvalidArgument, "sliding block code without domain");
  if (code.memory < 0 || code.anticipation < 0) fail(ErrorKind::InvalidArgument, "negative memory or anticipation");
  Recoded out{higher_block(*code.domain, code.window()), {}};
  std::vector<LetterId> labels;
  for (const auto& block : out.presentation.blocks) {
    auto it = code.table.find(block);
    if (it == code.table.end())
      fail(ErrorKind::PartialBlockMap,
           "block map " + code.name + " undefined on allowed block " + join_names(*code.domain, block, ""));
    labels.push_back(it->second);
  }
  out.code = OneBlockCode(code.name, out.presentation.sft, code.alphabet, std::move(labels));
  return out;
}

// -------------------------------------------------------------------- language

bool accepts(const OneStepSft& sft, std::span<const SymbolId> word) {
  for (auto s : word)
    if (s >= sft.size()) return false;
  for (std::size_t k = 0; k + 1 < word.size(); ++k)
    if (!sft.has_edge(word[k], word[k + 1])) return false;
  return true;
}

bool accepts(const OneBlockCode& code, std::span<const LetterId> word) {
  if (word.empty()) return true;
  SymbolSet cur = detail::select(code, code.domain().all_symbols(), word[0]);
  for (std::size_t k = 1; k < word.size() && !cur.empty(); ++k) cur = detail::step(code, cur, word[k]);
  return !cur.empty();
}

std::vector<std::vector<SymbolId>> enumerate_words(const OneStepSft& sft, std::size_t n) {
  std::vector<std::vector<SymbolId>> out;
  if (n == 0) return {{}};
  std::vector<SymbolId> word;
  auto rec = [&](auto&& self) -> void {
    if (word.size() == n) {
      out.push_back(word);
      return;
    }
    auto next = word.empty() ? std::span<const SymbolId>() : sft.successors(word.back());
    if (word.empty()) {
      for (SymbolId s = 0; s < sft.size(); ++s) {
        word.push_back(s);
        self(self);
        word.pop_back();
      }
      return;
    }
    for (SymbolId s : next) {
      word.push_back(s);
      self(self);
      word.pop_back();
    }
  };
  rec(rec);
  return out;
}

std::vector<std::vector<LetterId>> enumerate_words(const OneBlockCode& code, std::size_t n) {
  std::vector<std::vector<LetterId>> out;
  if (n == 0) return {{}};
  std::vector<LetterId> word;
  auto rec = [&](auto&& self, const SymbolSet& cur) -> void {
    if (word.size() == n) {
      out.push_back(word);
      return;
    }
    for (LetterId l = 0; l < code.alphabet().size(); ++l) {
      SymbolSet next = word.empty() ? detail::select(code, cur, l) : detail::step(code, cur, l);
      if (next.empty()) continue;
      word.push_back(l);
      self(self, next);
      word.pop_back();
    }
  };
  rec(rec, code.domain().all_symbols());
  return out;
}

// --------------------------------------------------------------------- bracket

RayPoint bracket(const RayPoint& t, const RayPoint& t_prime) {
  if (t.at(0) != t_prime.at(0)) fail(ErrorKind::BracketUndefined, "points differ at coordinate 0");
  const std::int64_t a = std::min<std::int64_t>(t_prime.left_end(), 0);
  const std::int64_t b = std::max<std::int64_t>(t.right_start(), 0);
  RayPoint out;
  out.transient = t_prime.window(a, 0);
  auto right = t.window(0, b);
  out.transient.insert(out.transient.end(), right.begin(), right.end());
  out.left_cycle = t_prime.window(a - static_cast<std::int64_t>(t_prime.left_cycle.size()), a);
  out.right_cycle = t.window(b, b + static_cast<std::int64_t>(t.right_cycle.size()));
  out.origin = -a;
  return out.normalized();
}

// -------------------------------------------------------------- code algebra

OneBlockCode compose_codes(const OneBlockCode& first, const OneBlockCode& second) {
  std::vector<LetterId> labels;
  labels.reserve(first.domain().size());
  for (SymbolId s = 0; s < first.domain().size(); ++s) {
    const std::string& mid = first.letter_name(first.label(s));
    auto t = second.domain().find(mid);
    if (!t)
      fail(ErrorKind::AlphabetMismatch, "letter '" + mid + "' of " + first.name() + " is not a symbol of " +
                                            second.domain().name());
    labels.push_back(second.label(*t));
  }
  return OneBlockCode(second.name() + "*" + first.name(), first.domain_ptr(), second.alphabet(), std::move(labels));
}

RayPoint apply_code(const OneBlockCode& code, const RayPoint& point) {
  auto map = [&](const std::vector<std::uint32_t>& w) {
    std::vector<std::uint32_t> out;
    for (auto s : w) out.push_back(code.label(s));
    return out;
  };
  RayPoint out{map(point.left_cycle), map(point.transient), map(point.right_cycle), point.origin};
  return out.normalized();
}

ImageComparison image_equal(const OneBlockCode& a, const OneBlockCode& b) {
  ImageComparison out;
  out.separating_word = detail::separating_word(a, a.domain().all_symbols(), b, b.domain().all_symbols());
  out.equal = !out.separating_word.has_value();
  return out;
}

// ----------------------------------------------------------------- isomorphism

namespace {

std::optional<std::vector<SymbolId>> isomorphism_search(const OneStepSft& a, const OneStepSft& b,
                                                        const std::function<bool(SymbolId, SymbolId)>& compatible) {
  const std::size_t n = a.size();
  if (n != b.size() || a.edge_count() != b.edge_count()) return std::nullopt;
  auto signature = [](const OneStepSft& g, SymbolId s) {
    return std::make_tuple(g.successors(s).size(), g.predecessors(s).size(), g.has_edge(s, s));
  };
  // Visit a's symbols in BFS order so each new symbol is adjacent to mapped ones.
  std::vector<SymbolId> order;
  std::vector<bool> queued(n, false);
  for (SymbolId root = 0; root < n; ++root) {
    if (queued[root]) continue;
    queued[root] = true;
    order.push_back(root);
    for (std::size_t head = order.size() - 1; head < order.size(); ++head) {
      SymbolId v = order[head];
      std::vector<SymbolId> nb(a.successors(v).begin(), a.successors(v).end());
      nb.insert(nb.end(), a.predecessors(v).begin(), a.predecessors(v).end());
      for (SymbolId w : nb)
        if (!queued[w]) {
          queued[w] = true;
          order.push_back(w);
        }
    }
  }
  constexpr SymbolId kNone = UINT32_MAX;
  std::vector<SymbolId> map(n, kNone);
  std::vector<bool> used(n, false);
  auto consistent = [&](SymbolId v, SymbolId w) {
    for (SymbolId u = 0; u < n; ++u) {
      if (map[u] == kNone) continue;
      if (a.has_edge(v, u) != b.has_edge(w, map[u])) return false;
      if (a.has_edge(u, v) != b.has_edge(map[u], w)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    SymbolId v = order[depth];
    for (SymbolId w = 0; w < n; ++w) {
      if (used[w] || signature(a, v) != signature(b, w) || !compatible(v, w) || !consistent(v, w)) continue;
      map[v] = w;
      used[w] = true;
      if (self(self, depth + 1)) return true;
      map[v] = kNone;
      used[w] = false;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return map;
}

}  // namespace

std::optional<std::vector<SymbolId>> find_isomorphism(const OneBlockCode& a, const OneBlockCode& b) {
  return isomorphism_search(a.domain(), b.domain(), [&](SymbolId v, SymbolId w) {
    return a.letter_name(a.label(v)) == b.letter_name(b.label(w));
  });
}

std::optional<std::vector<SymbolId>> find_isomorphism(const OneStepSft& a, const OneStepSft& b) {
  return isomorphism_search(a, b, [](SymbolId, SymbolId) { return true; });
}

// -------------------------------------------------------------------- strings

std::string join_names(const OneStepSft& sft, std::span<const SymbolId> symbols, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    if (k > 0) out += sep;
    out += sft.symbol_name(symbols[k]);
  }
  return out;
}

std::string word_string(const std::vector<std::string>& names, std::span<const std::uint32_t> word) {
  bool compact = true;
  for (auto s : word) compact = compact && names.at(s).size() == 1;
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k > 0 && !compact) out += ' ';
    out += names.at(word[k]);
  }
  return out;
}

std::string point_string(const std::vector<std::string>& names, const RayPoint& point) {
  RayPoint p = point.normalized();
  std::string out = "(" + word_string(names, p.left_cycle) + ")^-inf ";
  if (!p.transient.empty()) out += word_string(names, p.transient) + " ";
  out += "(" + word_string(names, p.right_cycle) + ")^+inf @" + std::to_string(p.origin);
  return out;
}

}  // namespace symdyn

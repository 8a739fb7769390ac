#include "symdyn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "graph_util.hpp"
#include "symdyn/error.hpp"

namespace symdyn {

namespace {

// Power iteration on A + I (primitive whenever A is irreducible), with the
// Collatz-Wielandt bounds min/max (Mx)_i / x_i bracketing the Perron root.
double perron_root(const OneStepSft& g) {
  const std::size_t n = g.size();
  std::vector<long double> x(n, 1.0L), y(n);
  long double lo = 0, hi = 0;
  for (int iter = 0; iter < 2000000; ++iter) {
    for (SymbolId i = 0; i < n; ++i) {
      long double sum = x[i];
      for (SymbolId j : g.successors(i)) sum += x[j];
      y[i] = sum;
    }
    lo = INFINITY;
    hi = 0;
    long double top = 0;
    for (std::size_t i = 0; i < n; ++i) {
      long double r = y[i] / x[i];
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      top = std::max(top, y[i]);
    }
    if (hi - lo < 1e-13L) break;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / top;
  }
  return static_cast<double>((lo + hi) / 2 - 1);
}

std::uint32_t period_of(const OneStepSft& g) {
  const std::size_t n = g.size();
  std::vector<std::int64_t> level(n, -1);
  std::vector<SymbolId> queue{0};
  level[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (SymbolId w : g.successors(queue[head]))
      if (level[w] < 0) {
        level[w] = level[queue[head]] + 1;
        queue.push_back(w);
      }
  std::int64_t p = 0;
  for (auto [u, v] : g.edges()) p = std::gcd(p, std::llabs(level[u] + 1 - level[v]));
  return static_cast<std::uint32_t>(p == 0 ? 1 : p);
}

}  // namespace

double entropy(const OneStepSft& sft) {
  auto comps = chain_components(sft);
  return comps.empty() ? 0.0 : comps.front().entropy;
}

std::vector<ChainComponent> chain_components(const OneStepSft& sft) {
  detail::Sccs sccs = detail::strongly_connected(detail::adjacency(sft));
  std::vector<ChainComponent> out;
  for (std::size_t c = 0; c < sccs.members.size(); ++c) {
    if (!sccs.cyclic[c]) continue;
    ChainComponent comp;
    comp.symbols = sccs.members[c];
    std::vector<bool> keep(sft.size(), false);
    for (SymbolId s : comp.symbols) keep[s] = true;
    comp.name = join_names(sft, comp.symbols, ",");
    comp.induced = induced(sft, keep, sft.name() + "[" + comp.name + "]");
    double root = perron_root(comp.induced.sft);
    comp.entropy = root <= 1.0 ? 0.0 : std::log(root);
    comp.period = period_of(comp.induced.sft);
    out.push_back(std::move(comp));
  }
  // Entropies on a 1e-8 grid so numerically equal roots sort by name.
  auto key = [](const ChainComponent& c) { return std::llround(c.entropy * 1e8); };
  std::sort(out.begin(), out.end(), [&](const ChainComponent& a, const ChainComponent& b) {
    if (key(a) != key(b)) return key(a) > key(b);
    return a.name < b.name;
  });
  return out;
}

MaxEntropy max_entropy_component(const OneStepSft& sft) {
  auto comps = chain_components(sft);
  if (comps.empty()) fail(ErrorKind::EmptyShift, sft.name() + " has no irreducible component");
  MaxEntropy out;
  const double top = comps.front().entropy;
  for (auto& c : comps)
    if (c.entropy >= top - kEntropyTieBand) out.maximizers.push_back(std::move(c));
  out.ambiguous = out.maximizers.size() > 1;
  return out;
}

OneBlockCode restrict_to_max_entropy(const OneBlockCode& code) {
  MaxEntropy mx = max_entropy_component(code.domain());
  if (mx.ambiguous) {
    std::string names;
    for (const auto& c : mx.maximizers) names += " {" + c.name + "}";
    fail(ErrorKind::AmbiguousComponent, "maximal-entropy components of " + code.domain().name() + " tie:" + names);
  }
  return code.restricted(mx.best().induced);
}

std::vector<RayPoint> periodic_points(const OneStepSft& sft, std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "period must be positive");
  std::vector<RayPoint> out;
  std::vector<SymbolId> walk;
  auto rec = [&](auto&& self) -> void {
    if (walk.size() == n) {
      if (sft.has_edge(walk.back(), walk.front())) out.push_back(RayPoint::periodic(walk).normalized());
      return;
    }
    for (SymbolId t : sft.successors(walk.back())) {
      walk.push_back(t);
      self(self);
      walk.pop_back();
    }
  };
  for (SymbolId s = 0; s < sft.size(); ++s) {
    walk = {s};
    rec(rec);
  }
  return out;
}

std::uint64_t trace_power(const OneStepSft& sft, std::size_t n) {
  const std::size_t k = sft.size();
  using Matrix = std::vector<std::vector<std::uint64_t>>;
  Matrix a(k, std::vector<std::uint64_t>(k, 0));
  for (auto [u, v] : sft.edges()) a[u][v] = 1;
  Matrix p(k, std::vector<std::uint64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i) p[i][i] = 1;
  for (std::size_t step = 0; step < n; ++step) {
    Matrix q(k, std::vector<std::uint64_t>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t m = 0; m < k; ++m)
        if (p[i][m])
          for (std::size_t j = 0; j < k; ++j) q[i][j] += p[i][m] * a[m][j];
    p = std::move(q);
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < k; ++i) t += p[i][i];
  return t;
}

std::uint64_t preimage_count(const OneBlockCode& code, const RayPoint& y) {
  const RayPoint yn = y.normalized();
  if (!yn.transient.empty() || yn.left_cycle != yn.right_cycle)
    fail(ErrorKind::InvalidArgument, "preimage_count needs a periodic point");
  const auto& c = yn.right_cycle;
  for (auto l : c)
    if (l >= code.alphabet().size()) fail(ErrorKind::NotInImage, "letter outside the alphabet of " + code.name());
  const OneStepSft& dom = code.domain();
  const std::size_t p = c.size();

  // Block graph: nodes are symbols labeled c[0]; an edge per labeled path
  // reading one full period.
  std::vector<SymbolId> nodes;
  std::vector<std::int64_t> index(dom.size(), -1);
  for (SymbolId s = 0; s < dom.size(); ++s)
    if (code.label(s) == c[0]) {
      index[s] = static_cast<std::int64_t>(nodes.size());
      nodes.push_back(s);
    }
  const std::size_t m = nodes.size();
  std::vector<std::vector<std::uint64_t>> mult(m, std::vector<std::uint64_t>(m, 0));
  for (std::size_t u = 0; u < m; ++u) {
    std::vector<std::uint64_t> cur(dom.size(), 0);
    cur[nodes[u]] = 1;
    for (std::size_t k = 1; k <= p; ++k) {
      const LetterId want = c[k % p];
      std::vector<std::uint64_t> next(dom.size(), 0);
      for (SymbolId s = 0; s < dom.size(); ++s) {
        if (!cur[s]) continue;
        for (SymbolId t : dom.successors(s))
          if (code.label(t) == want) next[t] = std::min<std::uint64_t>(next[t] + cur[s], 1u << 30);
      }
      cur = std::move(next);
    }
    for (std::size_t v = 0; v < m; ++v) mult[u][v] = cur[nodes[v]];
  }
  detail::Adjacency adj(m);
  for (std::size_t u = 0; u < m; ++u)
    for (std::size_t v = 0; v < m; ++v)
      if (mult[u][v]) adj[u].push_back(static_cast<std::uint32_t>(v));
  detail::Sccs sccs = detail::strongly_connected(adj);
  std::uint64_t total = 0;
  for (std::size_t comp = 0; comp < sccs.members.size(); ++comp) {
    if (!sccs.cyclic[comp]) continue;
    for (auto u : sccs.members[comp]) {
      std::uint64_t inside = 0;
      for (auto v : sccs.members[comp]) inside += mult[u][v];
      if (inside != 1)
        fail(ErrorKind::InfinitePreimage, "periodic point " + point_string(code.alphabet(), yn) + " has infinitely "
                                          "many periodic preimages under " + code.name());
    }
    total += sccs.members[comp].size();
  }
  if (total == 0) fail(ErrorKind::NotInImage, point_string(code.alphabet(), yn) + " is not in the image of " + code.name());
  return total;
}

}  // namespace symdyn

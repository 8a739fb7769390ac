#include "symdyn/fiber.hpp"

#include <algorithm>
#include <set>

#include "symdyn/cover.hpp"
#include "symdyn/error.hpp"
#include "symdyn/relations.hpp"
#include "symdyn/spectral.hpp"

namespace symdyn {

namespace {

constexpr std::size_t kCommuteWordCap = 4000000;

struct Restricted {
  OneBlockCode a;
  OneBlockCode b;
};

// Both projections restricted to the unique maximal-entropy component.
Restricted max_entropy_projections(const FiberProduct& g) {
  MaxEntropy mx = max_entropy_component(*g.sft);
  if (mx.ambiguous) {
    std::string names;
    for (const auto& c : mx.maximizers) names += " {" + c.name + "}";
    fail(ErrorKind::AmbiguousComponent, "fiber product " + g.sft->name() + " has tied components:" + names);
  }
  InducedSft ind = mx.best().induced;
  ind.sft = ind.sft.renamed(g.sft->name());
  return {g.proj_a.restricted(ind), g.proj_b.restricted(ind)};
}

std::string witness_text(const OneBlockCode& code, const ResolvingResult& r) {
  if (!r.witness) return "";
  const auto& names = code.domain().symbol_names();
  return point_string(names, r.witness->first) + " vs " + point_string(names, r.witness->second);
}

}  // namespace

FiberProduct fiber_product(const OneBlockCode& a, const OneBlockCode& b) {
  const OneStepSft& da = a.domain();
  const OneStepSft& db = b.domain();
  std::vector<Edge> pairs;
  std::vector<std::vector<std::int64_t>> id(da.size(), std::vector<std::int64_t>(db.size(), -1));
  for (SymbolId x = 0; x < da.size(); ++x)
    for (SymbolId z = 0; z < db.size(); ++z)
      if (a.letter_name(a.label(x)) == b.letter_name(b.label(z))) {
        id[x][z] = static_cast<std::int64_t>(pairs.size());
        pairs.emplace_back(x, z);
      }
  const std::string name = "G(" + a.name() + "," + b.name() + ")";
  if (pairs.empty()) fail(ErrorKind::EmptyFiber, name + " has no label-compatible pairs");
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    auto [x, z] = pairs[k];
    for (SymbolId x2 : da.successors(x))
      for (SymbolId z2 : db.successors(z))
        if (id[x2][z2] >= 0) edges.emplace_back(static_cast<SymbolId>(k), static_cast<SymbolId>(id[x2][z2]));
  }
  std::vector<std::string> names;
  for (auto [x, z] : pairs) names.push_back("(" + da.symbol_name(x) + "," + db.symbol_name(z) + ")");
  std::vector<SymbolId> remap;
  OneStepSft raw = OneStepSft::from_indexed(name, names, edges, &remap);
  std::vector<Edge> sorted(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) sorted[remap[k]] = pairs[k];

  InducedSft trimmed;
  try {
    trimmed = trim_essential_induced(raw);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptyShift) throw;
    fail(ErrorKind::EmptyFiber, name + " has no bi-infinite point");
  }
  FiberProduct out;
  out.sft = share(std::move(trimmed.sft));
  std::vector<LetterId> la, lb;
  for (SymbolId p : trimmed.to_parent) {
    out.pairs.push_back(sorted[p]);
    la.push_back(sorted[p].first);
    lb.push_back(sorted[p].second);
  }
  out.proj_a = OneBlockCode("p1", out.sft, da.symbol_names(), std::move(la));
  out.proj_b = OneBlockCode("p2", out.sft, db.symbol_names(), std::move(lb));
  return out;
}

InjectivityResult injectivity_check(const OneBlockCode& code) {
  RelationSft pr = pair_relation(code);
  InjectivityResult out;
  for (auto [a, b] : pr.pairs)
    if (a != b) {
      out.injective = false;
      out.witness = Edge{a, b};
      break;
    }
  return out;
}

OneBlockCode compose_path(const std::vector<OneBlockCode>& path) {
  if (path.empty()) fail(ErrorKind::InvalidArgument, "empty composition");
  OneBlockCode out = path.front();
  for (std::size_t k = 1; k < path.size(); ++k) out = compose_codes(out, path[k]);
  return out;
}

CommuteResult commuting_check(const std::vector<OneBlockCode>& left, const std::vector<OneBlockCode>& right,
                              std::size_t L) {
  OneBlockCode f = compose_path(left);
  OneBlockCode g = compose_path(right);
  if (!(f.domain() == g.domain()))
    fail(ErrorKind::InvalidArgument, "composites start at different systems (" + f.domain().name() + ", " +
                                         g.domain().name() + ")");
  const OneStepSft& dom = f.domain();
  CommuteResult out;
  auto agree = [&](SymbolId s) { return f.letter_name(f.label(s)) == g.letter_name(g.label(s)); };
  for (SymbolId s = 0; s < dom.size(); ++s)
    if (!agree(s)) {
      out.commutes = false;
      out.witness = std::vector<SymbolId>{s};
      out.max_length = 1;
      out.words_checked = 1;
      return out;
    }
  // Word-level pass: every word of length <= L, compared letter by letter.
  std::vector<SymbolId> word;
  bool capped = false;
  std::size_t deepest = 0;
  auto rec = [&](auto&& self) -> bool {
    ++out.words_checked;
    deepest = std::max(deepest, word.size());
    if (!agree(word.back())) {
      out.witness = word;
      return false;
    }
    if (word.size() == L) return true;
    if (out.words_checked > kCommuteWordCap) {
      capped = true;
      return true;
    }
    for (SymbolId t : dom.successors(word.back())) {
      word.push_back(t);
      bool ok = self(self);
      word.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  for (SymbolId s = 0; s < dom.size() && out.commutes; ++s) {
    word = {s};
    out.commutes = rec(rec);
  }
  out.max_length = capped ? deepest - 1 : std::min(L, deepest);
  return out;
}

MinimalLift minimal_lift(const OneBlockCode& alpha, const OneBlockCode& cover, std::size_t L, std::size_t max_window) {
  ResolvingResult res = resolving_check(alpha, Direction::U);
  if (!res.resolving)
    fail(ErrorKind::NotResolving, alpha.name() + " is not u-resolving: " + witness_text(alpha, res));
  const OneStepSft& X = alpha.domain();
  auto comps = chain_components(X);
  if (comps.size() != 1 || comps.front().symbols.size() != X.size())
    fail(ErrorKind::HypothesisFailed, "domain " + X.name() + " is not irreducible");

  MinimalLift out;
  out.cover = cover;
  FiberProduct g = fiber_product(alpha, cover);
  Restricted r = max_entropy_projections(g);
  out.rho1 = r.a.renamed("rho1");
  out.rho2 = r.b.renamed("rho2");
  out.fiber_symbols = out.rho1.domain().size();
  InjectivityResult inj = injectivity_check(out.rho1);
  if (!inj.injective) {
    const OneStepSft& c = out.rho1.domain();
    fail(ErrorKind::Rho1NotInjective, "rho1 identifies " + c.symbol_name(inj.witness->first) + " and " +
                                          c.symbol_name(inj.witness->second) + " along equal images");
  }

  // beta = rho2 o rho1^-1, found as the smallest window on X that determines
  // the rho2 symbol of every lift.
  const OneStepSft& C = out.rho1.domain();
  for (std::size_t w = 1; w <= max_window; ++w) {
    auto words = enumerate_words(X, w);
    for (std::size_t m = 0; m < w; ++m) {
      std::map<std::vector<SymbolId>, LetterId> table;
      bool determined = true;
      for (const auto& word : words) {
        std::set<LetterId> values;
        std::vector<SymbolId> path;
        auto rec = [&](auto&& self) -> void {
          const std::size_t k = path.size();
          if (k == w) {
            values.insert(out.rho2.label(path[m]));
            return;
          }
          auto cands = k == 0 ? C.all_symbols() : SymbolSet(C.successors(path.back()).begin(), C.successors(path.back()).end());
          for (SymbolId c : cands)
            if (out.rho1.label(c) == word[k]) {
              path.push_back(c);
              self(self);
              path.pop_back();
            }
        };
        rec(rec);
        if (values.empty())
          fail(ErrorKind::HypothesisFailed, "rho1 is not onto: " + word_string(X.symbol_names(), word) + " has no lift");
        if (values.size() > 1) {
          determined = false;
          break;
        }
        table[word] = *values.begin();
      }
      if (!determined) continue;
      SlidingBlockCode beta;
      beta.name = "beta";
      beta.domain = alpha.domain_ptr();
      beta.memory = static_cast<int>(m);
      beta.anticipation = static_cast<int>(w - 1 - m);
      beta.alphabet = out.rho2.alphabet();
      beta.table = std::move(table);
      out.memory = beta.memory;
      out.anticipation = beta.anticipation;
      if (w == 1) {
        std::vector<LetterId> labels;
        for (SymbolId s = 0; s < X.size(); ++s) labels.push_back(beta.table.at({s}));
        out.beta = OneBlockCode("beta", alpha.domain_ptr(), beta.alphabet, std::move(labels));
        out.alpha_on_beta_domain = alpha;
      } else {
        Recoded rec = recode_one_block(beta);
        out.beta = rec.code;
        std::vector<LetterId> pick;
        for (const auto& b : rec.presentation.blocks) pick.push_back(b[m]);
        OneBlockCode pick_m("pick", rec.presentation.sft, X.symbol_names(), std::move(pick));
        out.alpha_on_beta_domain = compose_codes(pick_m, alpha);
      }
      out.commute = commuting_check({out.beta, cover}, {out.alpha_on_beta_domain}, L);
      return out;
    }
  }
  fail(ErrorKind::CapExceeded, "rho2 o rho1^-1 is not a block code with window <= " + std::to_string(max_window));
}

ConstantToOne constant_to_one_check(const OneBlockCode& code, std::uint32_t P) {
  for (Direction dir : {Direction::U, Direction::S}) {
    ResolvingResult r = resolving_check(code, dir);
    if (!r.resolving)
      fail(ErrorKind::HypothesisFailed, code.name() + " is not " + (dir == Direction::U ? "u" : "s") +
                                            "-resolving: " + witness_text(code, r));
  }
  ConstantToOne out;
  out.P = P;
  std::optional<RayPoint> first;
  for (std::size_t n = 1; n <= P; ++n)
    for (const auto& c : image_necklaces(code, n)) {
      RayPoint y = RayPoint::periodic(c);
      std::uint64_t count = preimage_count(code, y);
      ++out.points_checked;
      if (!first) {
        first = y;
        out.k = count;
      } else if (count != out.k) {
        fail(ErrorKind::NonConstant, point_string(code.alphabet(), *first) + " has " + std::to_string(out.k) +
                                         " preimages but " + point_string(code.alphabet(), y) + " has " +
                                         std::to_string(count));
      }
    }
  return out;
}

const DiagramArrow& FiberDiagram::arrow(const std::string& name) const {
  for (const auto& a : arrows)
    if (a.name == name) return a;
  fail(ErrorKind::UnknownName, "diagram has no arrow " + name);
}

FiberDiagram lift_diagram(const OneBlockCode& pi, std::size_t L) {
  FiniteToOneResult fto = finite_to_one_check(pi);
  if (!fto.finite_to_one)
    fail(ErrorKind::NotFiniteToOne, pi.name() + " has a diamond " + word_string(pi.domain().symbol_names(), fto.witness->top) +
                                        " / " + word_string(pi.domain().symbol_names(), fto.witness->bottom));
  FiberDiagram dg;
  dg.L = L;
  dg.nodes = {"X", "Y", "Xbar", "Ybar", "Xtilde", "Ytilde"};

  OneBlockCode beta = alpha_extension(pi).renamed("beta");
  Restricted lower = max_entropy_projections(fiber_product(pi, beta));
  OneBlockCode psi = lower.a.renamed("psi");
  OneBlockCode pibar = lower.b.renamed("pibar");

  CoverSft cov = build_cover(pibar);
  QuotientPresentation yplus = quotient_presentation(cov, RelationKind::Theta);
  OneBlockCode betat = restrict_to_max_entropy(yplus.code).renamed("betatilde");

  Restricted upper = max_entropy_projections(fiber_product(pibar, betat));
  OneBlockCode gammat = upper.a.renamed("gammatilde");
  OneBlockCode pit = upper.b.renamed("pitilde");

  OneBlockCode left = compose_path({gammat, psi}).renamed("gamma");
  OneBlockCode right = compose_path({betat, beta}).renamed("betaright");

  auto add = [&](const std::string& name, const std::string& s, const std::string& t, const OneBlockCode& c,
                 std::map<std::string, bool> tags) { dg.arrows.push_back({name, s, t, c, std::move(tags)}); };
  auto resolving = [&](const OneBlockCode& c, Direction d, const std::string& what) {
    ResolvingResult r = resolving_check(c, d);
    if (!r.resolving) dg.failures.push_back(what + " " + witness_text(c, r));
    return r.resolving;
  };
  add("pi", "X", "Y", pi, {{"finite_to_one", true}});
  add("beta", "Ybar", "Y", beta, {});
  add("psi", "Xbar", "X", psi, {});
  add("pibar", "Xbar", "Ybar", pibar, {});
  add("betatilde", "Ytilde", "Ybar", betat, {});
  add("gammatilde", "Xtilde", "Xbar", gammat, {});
  add("pitilde", "Xtilde", "Ytilde", pit, {{"s_resolving", resolving(pit, Direction::S, "top pitilde is not s-resolving:")}});
  add("vertical_x", "Xtilde", "X", left,
      {{"u_resolving", resolving(left, Direction::U, "vertical Xtilde->X is not u-resolving:")}});
  add("vertical_y", "Ytilde", "Y", right,
      {{"u_resolving", resolving(right, Direction::U, "vertical Ytilde->Y is not u-resolving:")}});

  auto check = [&](const std::string& name, const std::vector<OneBlockCode>& a, const std::vector<OneBlockCode>& b) {
    CommuteResult c = commuting_check(a, b, L);
    if (!c.commutes) {
      const auto& dom = a.front().domain();
      dg.failures.push_back(name + " does not commute on " + word_string(dom.symbol_names(), *c.witness));
    }
    dg.commutations.emplace_back(name, std::move(c));
  };
  check("lower", {psi, pi}, {pibar, beta});
  check("upper", {gammat, pibar}, {pit, betat});
  check("square", {gammat, psi, pi}, {pit, betat, beta});
  return dg;
}

}  // namespace symdyn

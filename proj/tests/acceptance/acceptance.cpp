// One line per acceptance criterion; exit status 1 if any line fails.

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "symdyn/cover.hpp"
#include "symdyn/degree.hpp"
#include "symdyn/error.hpp"
#include "symdyn/fiber.hpp"
#include "symdyn/manifest.hpp"
#include "symdyn/relations.hpp"
#include "symdyn/spectral.hpp"

using namespace symdyn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Checker {
  Outcome out;
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    out.pass = false;
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += what;
  }
};

Manifest fixture(const std::string& name) { return load_manifest(std::string(SYMDYN_FIXTURES) + "/" + name); }

std::vector<SftPtr> fixture_systems() {
  std::vector<SftPtr> out;
  for (const char* f : {"ev.sdm", "xor.sdm", "gm.sdm"})
    for (const auto& [name, s] : fixture(f).systems) out.push_back(s);
  return out;
}

std::vector<OneBlockCode> fixture_codes() {
  std::vector<OneBlockCode> out;
  for (const char* f : {"ev.sdm", "xor.sdm", "gm.sdm"})
    for (const auto& [name, c] : fixture(f).codes) out.push_back(c);
  return out;
}

Outcome identity_cover() {
  Checker c;
  for (const auto& s : fixture_systems()) {
    CoverSft cov = build_cover(OneBlockCode::identity(s));
    c.expect(find_isomorphism(*cov.sft, *s).has_value(), s->name() + ": cover not isomorphic");
    c.expect(injectivity_check(cov.base_code).injective, s->name() + ": base code not injective");
    c.expect(resolving_check(cov.base_code, Direction::U).resolving, s->name() + ": base code not u-resolving");
  }
  return c.out;
}

Outcome fischer_agreement() {
  Checker c;
  OneBlockCode ev = fixtures::ev();
  QuotientPresentation q = quotient_presentation(build_cover(ev), RelationKind::Alpha);
  OneBlockCode f = fischer_cover(ev);
  bool iso = q.code.domain().size() <= 5 && f.domain().size() <= 5 && find_isomorphism(q.code, f).has_value();
  std::ostringstream msg;
  msg << "alpha quotient has " << q.code.domain().size() << " symbols, Fischer cover " << f.domain().size();
  if (!iso && find_isomorphism(alpha_extension(ev), f)) msg << " (its max-entropy component is isomorphic)";
  c.expect(iso, msg.str());
  return c.out;
}

Outcome u_resolving_certification() {
  Checker c;
  auto corpus = fixtures::random_corpus();
  c.expect(corpus.size() >= 10, "corpus too small");
  for (const auto& code : corpus) {
    CoverSft cov = build_cover(code);
    QuotientPresentation q = quotient_presentation(cov, RelationKind::Alpha);
    c.expect(resolving_check(q.code, Direction::U).resolving, code.name() + ": quotient not u-resolving");
    c.expect(forward_closed(q.relation, pair_relation(cov.base_code)).closed, code.name() + ": not forward closed");
  }
  return c.out;
}

Outcome resolving_oracle() {
  Checker c;
  auto corpus = fixtures::random_corpus();
  for (const auto& code : fixtures::right_resolving_corpus()) corpus.push_back(code);
  for (const auto& code : fixture_codes()) corpus.push_back(code);
  for (const auto& code : corpus)
    c.expect(resolving_check(code, Direction::U).resolving == !oracles::divergent_pair(code, true, 12),
             code.name() + ": disagrees with pair-path search");
  return c.out;
}

Outcome d_equals_D() {
  Checker c;
  const std::pair<OneBlockCode, std::size_t> cases[] = {
      {fixtures::id(fixtures::gm()), 1}, {fixtures::ev(), 1}, {fixtures::xor_code(), 2}};
  for (const auto& [code, want] : cases) {
    MagicData md = verify_d_equals_D(code, 8);
    c.expect(md.d == want && md.D == want,
             code.name() + ": d=" + std::to_string(md.d) + " D=" + std::to_string(md.D));
  }
  return c.out;
}

Outcome constant_to_one() {
  Checker c;
  OneBlockCode x = fixtures::xor_code();
  c.expect(resolving_check(x, Direction::U).resolving && resolving_check(x, Direction::S).resolving,
           "XOR not bi-resolving");
  ConstantToOne k = constant_to_one_check(x, 8);
  c.expect(k.k == 2, "XOR is " + std::to_string(k.k) + "-to-one");
  c.expect(k.points_checked > 0, "no periodic points checked");
  return c.out;
}

Outcome entropy_checks() {
  Checker c;
  double gm = entropy(*fixtures::gm());
  double f2 = entropy(*fixtures::f2());
  c.expect(std::abs(gm - std::log(std::numbers::phi)) < 1e-9, "entropy(GM)");
  c.expect(std::abs(f2 - std::log(2.0)) < 1e-9, "entropy(F2)");
  for (const auto& code : fixture_codes()) {
    CoverSft cov = build_cover(code);
    OneBlockCode top = restrict_to_max_entropy(cov.base_code);
    c.expect(image_equal(top, code).equal, code.name() + ": max-entropy component misses the image");
  }
  return c.out;
}

Outcome minimal_lift_property() {
  Checker c;
  Manifest m = fixture("ev.sdm");
  MinimalLift ml = minimal_lift(m.code("EVS"), m.code("EVF"), 12);
  c.expect(injectivity_check(ml.rho1).injective, "rho1 not injective");
  c.expect(ml.commute.commutes, "alpha != cover o beta");
  c.expect(ml.commute.max_length == 12, "checked to length " + std::to_string(ml.commute.max_length));
  return c.out;
}

Outcome lift_square() {
  Checker c;
  for (const auto& pi : {fixtures::ev(), fixtures::xor_code()}) {
    FiberDiagram dg = lift_diagram(pi, 12);
    for (const char* v : {"vertical_x", "vertical_y"})
      c.expect(resolving_check(dg.arrow(v).code, Direction::U).resolving, pi.name() + ": " + v + " not u-resolving");
    c.expect(resolving_check(dg.arrow("pitilde").code, Direction::S).resolving, pi.name() + ": top not s-resolving");
    for (const auto& [name, r] : dg.commutations)
      c.expect(r.commutes && r.max_length == 12, pi.name() + ": " + name + " does not commute");
    c.expect(dg.verified(), pi.name() + ": diagram not verified");
  }
  return c.out;
}

Outcome spectral_decomposition() {
  Checker c;
  // GM and the even shift joined by a transient path a -> t -> x.
  auto bridged = share(OneStepSft::from_names(
      "GMTEV", {"a", "b", "t", "x", "y", "z"},
      {{"a", "a"}, {"a", "b"}, {"b", "a"}, {"a", "t"}, {"t", "x"}, {"x", "x"}, {"x", "y"}, {"y", "z"}, {"z", "x"}, {"z", "y"}}));
  for (const SftPtr& s : {fixture("gm.sdm").system("GMF2"), bridged}) {
    std::vector<int> seen(s->size(), 0);
    for (const auto& comp : chain_components(*s))
      for (SymbolId v : comp.symbols) ++seen[v];
    for (SymbolId v = 0; v < s->size(); ++v) {
      bool recurrent = false;
      for (std::size_t n = 1; n <= s->size() && !recurrent; ++n)
        for (const auto& p : periodic_points(*s, n))
          for (SymbolId u : p.right_cycle) recurrent = recurrent || u == v;
      c.expect(seen[v] == (recurrent ? 1 : 0), s->name() + ": symbol " + s->symbol_name(v) + " misplaced");
    }
    for (std::size_t n = 1; n <= 6; ++n) {
      std::uint64_t tr = trace_power(*s, n);
      c.expect(tr == periodic_points(*s, n).size() && tr == oracles::closed_walks(*s, n),
               s->name() + ": periodic count mismatch at n=" + std::to_string(n));
    }
  }
  return c.out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"identity cover conjugacy", identity_cover},
      {"Fischer agreement", fischer_agreement},
      {"u-resolving certification", u_resolving_certification},
      {"resolving check vs oracle", resolving_oracle},
      {"d = D", d_equals_D},
      {"constant-to-one", constant_to_one},
      {"entropy", entropy_checks},
      {"minimal lift", minimal_lift_property},
      {"lift square", lift_square},
      {"spectral decomposition", spectral_decomposition},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw ") + e.what()};
    }
    std::printf("%s %2zu %s%s%s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(),
                o.detail.empty() ? "" : ": ", o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%d/%zu passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}

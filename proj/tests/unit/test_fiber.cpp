#include "doctest.h"

#include "../support/fixtures.hpp"
#include "symdyn/error.hpp"
#include "symdyn/fiber.hpp"
#include "symdyn/relations.hpp"

using namespace symdyn;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidArgument;
}

OneBlockCode evf() {
  auto s = share(OneStepSft::from_names("EVFG", {"f0", "f1", "f2"},
                                        {{"f0", "f0"}, {"f0", "f1"}, {"f1", "f2"}, {"f2", "f0"}, {"f2", "f1"}}));
  return OneBlockCode::from_names("EVF", s, {"0", "1"}, {{"f0", "0"}, {"f1", "1"}, {"f2", "1"}});
}

}  // namespace

TEST_CASE("fiber product of an identity with itself is the diagonal") {
  auto g = fixtures::id(fixtures::gm());
  auto fp = fiber_product(g, g);
  CHECK(fp.sft->size() == 2);
  CHECK(fp.sft->edges().size() == 3);
  for (auto [a, b] : fp.pairs) CHECK(a == b);
  CHECK(fp.sft->symbol_name(0) == "(a,a)");
  CHECK(injectivity_check(fp.proj_a).injective);
}

TEST_CASE("self fiber product matches the pair relation") {
  auto ev = fixtures::ev();
  auto fp = fiber_product(ev, ev);
  auto pr = pair_relation(ev);
  CHECK(fp.pairs == pr.pairs);
  CHECK(fp.sft->edges() == pr.sft->edges());
  auto inj = injectivity_check(ev);
  CHECK_FALSE(inj.injective);
  REQUIRE(inj.witness);
  CHECK(inj.witness->first != inj.witness->second);
}

TEST_CASE("fiber product over letters") {
  auto fp = fiber_product(fixtures::xor_code(), fixtures::id(fixtures::f2()));
  CHECK(fp.sft->size() == 4);
  CHECK(fp.proj_b.alphabet() == std::vector<std::string>{"0", "1"});
  CHECK(kind_of([] { fiber_product(fixtures::id(fixtures::gm()), fixtures::constant_f2()); }) == ErrorKind::EmptyFiber);
}

TEST_CASE("injectivity") {
  CHECK(injectivity_check(fixtures::id(fixtures::f2())).injective);
  CHECK_FALSE(injectivity_check(fixtures::xor_code()).injective);
  CHECK_FALSE(injectivity_check(fixtures::constant_f2()).injective);
  // Every point of the even shift has one Fischer preimage except 1^inf.
  CHECK_FALSE(injectivity_check(evf()).injective);
}

TEST_CASE("commuting checks") {
  auto x = fixtures::xor_code();
  auto r = commuting_check({x}, {x}, 6);
  CHECK(r.commutes);
  CHECK(r.words_checked > 0);
  std::vector<LetterId> flipped = x.labels();
  flipped[0] ^= 1;
  OneBlockCode bad("XORBAD", x.domain_ptr(), x.alphabet(), flipped);
  auto w = commuting_check({bad}, {x}, 6);
  CHECK_FALSE(w.commutes);
  REQUIRE(w.witness);
  CHECK(w.witness->size() <= 3);
  CHECK(kind_of([&] { commuting_check({x}, {fixtures::ev()}, 4); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("minimal lift through the Fischer cover") {
  auto ml = minimal_lift(fixtures::ev_split(), evf());
  CHECK(ml.commute.commutes);
  CHECK(ml.beta.alphabet().size() == 3);
  CHECK(ml.memory + ml.anticipation >= 0);
  auto id = minimal_lift(evf(), evf());
  CHECK(id.commute.commutes);
  CHECK(id.fiber_symbols == 3);
  CHECK(id.memory == 0);
  CHECK(id.anticipation == 0);
  CHECK(kind_of([] { minimal_lift(fixtures::constant_f2(), fixtures::constant_f2()); }) == ErrorKind::NotResolving);
}

TEST_CASE("constant-to-one") {
  CHECK(constant_to_one_check(fixtures::xor_code()).k == 2);
  CHECK(constant_to_one_check(fixtures::id(fixtures::gm())).k == 1);
  CHECK(kind_of([] { constant_to_one_check(fixtures::ev()); }) == ErrorKind::NonConstant);
  CHECK(kind_of([] { constant_to_one_check(fixtures::constant_f2()); }) == ErrorKind::HypothesisFailed);
}

TEST_CASE("lift diagrams") {
  for (const auto& pi : {fixtures::ev(), fixtures::xor_code(), fixtures::id(fixtures::gm())}) {
    CAPTURE(pi.name());
    auto dg = lift_diagram(pi, 8);
    CHECK(dg.verified());
    CHECK(dg.nodes.size() == 6);
    CHECK(dg.arrow("pitilde").tags.at("s_resolving"));
    CHECK(dg.arrow("vertical_x").tags.at("u_resolving"));
    CHECK(dg.arrow("vertical_y").tags.at("u_resolving"));
    for (const auto& [name, c] : dg.commutations) CHECK(c.commutes);
  }
}

TEST_CASE("a corrupted arrow breaks its square") {
  auto dg = lift_diagram(fixtures::ev(), 8);
  const auto& a = dg.arrow("pitilde");
  std::vector<LetterId> labels = a.code.labels();
  REQUIRE(a.code.alphabet().size() >= 2);
  labels[0] = (labels[0] + 1) % a.code.alphabet().size();
  OneBlockCode bad("bad", a.code.domain_ptr(), a.code.alphabet(), labels);
  auto r = commuting_check({bad}, {a.code}, 8);
  CHECK_FALSE(r.commutes);
  REQUIRE(r.witness);
  CHECK(r.witness->size() <= 3);
}

#include "doctest.h"

#include "../support/fixtures.hpp"
#include "symdyn/error.hpp"
#include "symdyn/shift.hpp"

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

}  // namespace

TEST_CASE("symbols are sorted and looked up by name") {
  auto s = OneStepSft::from_names("S", {"b", "a", "c"}, {{"b", "a"}, {"a", "c"}});
  CHECK(s.symbol_names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(s.has_edge(s.at("b"), s.at("a")));
  CHECK_FALSE(s.has_edge(s.at("a"), s.at("b")));
  CHECK(kind_of([&] { s.at("zz"); }) == ErrorKind::UnknownName);
  CHECK(kind_of([] { OneStepSft::from_names("S", {"a", "a"}, {}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { OneStepSft::from_names("S", {"a"}, {{"a", "q"}}); }) == ErrorKind::UnknownName);
}

TEST_CASE("trim to the essential part") {
  auto gm = fixtures::gm();
  CHECK(trim_essential(*gm) == *gm);
  auto with_c = OneStepSft::from_names("G", {"a", "b", "c"}, {{"a", "a"}, {"a", "b"}, {"b", "a"}});
  auto t = trim_essential(with_c);
  CHECK(t.symbol_names() == std::vector<std::string>{"a", "b"});
  CHECK(t == *gm);
  auto chain = OneStepSft::from_names("C", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  CHECK(kind_of([&] { trim_essential(chain); }) == ErrorKind::EmptyShift);
  CHECK(fixtures::ev_sft()->is_essential());
  CHECK_FALSE(with_c.is_essential());
}

TEST_CASE("higher block presentations") {
  auto f2 = fixtures::f2();
  auto h1 = higher_block(*f2, 1);
  CHECK(h1.sft->size() == 2);
  CHECK(find_isomorphism(*h1.sft, *f2).has_value());
  auto g2 = higher_block(*fixtures::gm(), 2);
  CHECK(g2.sft->symbol_names() == std::vector<std::string>{"aa", "ab", "ba"});
  auto f22 = higher_block(*f2, 2);
  CHECK(f22.sft->size() == 4);
  CHECK(f22.sft->edge_count() == 8);
  // The first-symbol map is a conjugacy: injective on points.
  CHECK(f22.conjugacy.domain().size() == 4);
}

TEST_CASE("recoding sliding block codes") {
  auto id = recode_one_block(SlidingBlockCode::from_one_block(fixtures::id(fixtures::gm())));
  CHECK(find_isomorphism(id.code, fixtures::id(fixtures::gm())).has_value());

  auto x = fixtures::xor_code();
  CHECK(x.domain().symbol_names() == std::vector<std::string>{"00", "01", "10", "11"});
  std::vector<std::string> labels;
  for (SymbolId s = 0; s < 4; ++s) labels.push_back(x.letter_name(x.label(s)));
  CHECK(labels == std::vector<std::string>{"0", "1", "1", "0"});

  SlidingBlockCode c;
  c.name = "C";
  c.domain = fixtures::f2();
  c.alphabet = {"0"};
  c.table = {{{0}, 0}, {{1}, 0}};
  auto rc = recode_one_block(c);
  CHECK(rc.code.alphabet().size() == 1);
  CHECK(rc.code.domain() == *fixtures::f2());

  SlidingBlockCode partial = fixtures::xor_block_map();
  partial.table.erase({1, 1});
  CHECK(kind_of([&] { recode_one_block(partial); }) == ErrorKind::PartialBlockMap);
}

TEST_CASE("word acceptance and enumeration") {
  auto gm = fixtures::gm();
  std::vector<SymbolId> bb{1, 1}, aba{0, 1, 0};
  CHECK_FALSE(accepts(*gm, bb));
  CHECK(accepts(*gm, aba));
  auto ev = fixtures::ev();
  std::vector<LetterId> w010{0, 1, 0}, w101{1, 0, 1}, w1001{1, 0, 0, 1}, w0110{0, 1, 1, 0};
  // An odd run of 1s closed by 0s on both sides is excluded; 101 is not.
  CHECK_FALSE(accepts(ev, w010));
  CHECK(accepts(ev, w101));
  CHECK(accepts(ev, w1001));
  CHECK(accepts(ev, w0110));
  CHECK(enumerate_words(*fixtures::f2(), 2).size() == 4);
  auto words = enumerate_words(ev, 3);
  CHECK(words.size() == 7);
  CHECK(std::find(words.begin(), words.end(), w010) == words.end());
}

TEST_CASE("ray points normalize to a unique form") {
  RayPoint p{{0, 1, 0, 1}, {}, {0, 1}, 0};
  CHECK(p.normalized() == RayPoint::periodic({0, 1}));
  RayPoint q{{1}, {1, 1, 0}, {0}, 1};
  auto n = q.normalized();
  CHECK(n.transient.empty());
  CHECK(n.at(-5) == 1);
  CHECK(n.at(1) == 0);
  CHECK(n.at(0) == 1);
  RayPoint r = RayPoint::periodic({0, 1, 1}, 1);
  for (std::int64_t k = -7; k < 7; ++k) CHECK(r.shifted(3).at(k) == r.at(k + 3));
  for (std::int64_t k = -7; k < 7; ++k) CHECK(r.reversed().at(k) == r.at(-k));
}

TEST_CASE("bracket splices at coordinate zero") {
  auto gm = fixtures::gm();
  RayPoint t{{0}, {0}, {1, 0}, 0};
  RayPoint tp{{0, 1}, {0}, {0}, 0};
  CHECK(is_allowed(*gm, t));
  CHECK(is_allowed(*gm, tp));
  auto b = bracket(t, tp);
  CHECK(b == RayPoint::periodic({0, 1}));
  CHECK(is_allowed(*gm, b));
  CHECK(bracket(t, t) == t.normalized());
  // Brute check on a window.
  for (std::int64_t k = -9; k <= 9; ++k) CHECK(b.at(k) == (k >= 0 ? t.at(k) : tp.at(k)));
  CHECK(kind_of([] { bracket(RayPoint::periodic({0}), RayPoint::periodic({1})); }) ==
        ErrorKind::BracketUndefined);
}

TEST_CASE("image equality of sofic images") {
  auto gm = fixtures::id(fixtures::gm());
  CHECK(image_equal(gm, gm).equal);
  auto cmp = image_equal(fixtures::ev(), fixtures::id(fixtures::f2()));
  CHECK_FALSE(cmp.equal);
  REQUIRE(cmp.separating_word);
  CHECK(cmp.separating_word->size() == 3);
  // The separating word reads in exactly one of the two images.
  std::vector<LetterId> w;
  for (const auto& l : *cmp.separating_word) w.push_back(*fixtures::ev().find_letter(l));
  CHECK_FALSE(accepts(fixtures::ev(), w));
  CHECK(image_equal(fixtures::xor_code(), fixtures::id(fixtures::f2())).equal);
  // Brute force: every binary word up to length 6 is an XOR image word.
  for (std::size_t n = 1; n <= 6; ++n) CHECK(enumerate_words(fixtures::xor_code(), n).size() == (1u << n));
}

TEST_CASE("compose and apply codes") {
  auto x = fixtures::xor_code();
  auto id = fixtures::id(fixtures::f2());
  auto c = compose_codes(x, id);
  CHECK(find_isomorphism(c, x).has_value());
  CHECK(kind_of([&] { compose_codes(fixtures::ev(), fixtures::id(fixtures::gm())); }) ==
        ErrorKind::AlphabetMismatch);
  auto y = apply_code(x, RayPoint::periodic({1, 2}));  // (01 10)^inf -> (11)^inf
  CHECK(y == RayPoint::periodic({1}));
  auto bad = OneBlockCode::from_names("B", fixtures::f2(), {"0"}, {{"0", "0"}, {"1", "0"}});
  CHECK(kind_of([] {
          OneBlockCode::from_names("B", fixtures::f2(), {"0"}, {{"0", "0"}});
        }) == ErrorKind::PartialBlockMap);
  CHECK(kind_of([] {
          OneBlockCode::from_names("B", fixtures::f2(), {"0"}, {{"0", "0"}, {"1", "1"}});
        }) == ErrorKind::AlphabetMismatch);
  CHECK(bad.alphabet().size() == 1);
}

TEST_CASE("isomorphism search respects labels") {
  auto ev = fixtures::ev();
  auto renamed = OneBlockCode::from_names(
      "R", share(OneStepSft::from_names("R", {"p", "q", "r"}, {{"r", "r"}, {"r", "p"}, {"p", "q"}, {"q", "r"}, {"q", "p"}})),
      {"0", "1"}, {{"r", "0"}, {"p", "1"}, {"q", "1"}});
  auto iso = find_isomorphism(ev, renamed);
  REQUIRE(iso);
  CHECK(renamed.domain().symbol_name((*iso)[ev.domain().at("x")]) == "r");
  auto relabeled = OneBlockCode::from_names("R2", renamed.domain_ptr(), {"0", "1"}, {{"r", "1"}, {"p", "0"}, {"q", "1"}});
  CHECK_FALSE(find_isomorphism(ev, relabeled).has_value());
}

#include "doctest.h"

#include <cmath>

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"
#include "symdyn/degree.hpp"
#include "symdyn/error.hpp"
#include "symdyn/spectral.hpp"

using namespace symdyn;

namespace {

SftPtr loops() { return share(OneStepSft::from_names("LL", {"a", "b"}, {{"a", "a"}, {"b", "b"}})); }

SftPtr two_f2() {
  return share(OneStepSft::from_names("F2F2", {"0", "1", "2", "3"},
                                      {{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"},
                                       {"2", "2"}, {"2", "3"}, {"3", "2"}, {"3", "3"}}));
}

SftPtr gm_plus_loop() {
  return share(OneStepSft::from_names("GML", {"a", "b", "c"}, {{"a", "a"}, {"a", "b"}, {"b", "a"}, {"c", "c"}}));
}

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

TEST_CASE("chain components") {
  auto g = chain_components(*fixtures::gm());
  REQUIRE(g.size() == 1);
  CHECK(g[0].period == 1);
  auto l = chain_components(*loops());
  REQUIRE(l.size() == 2);
  CHECK(l[0].entropy == doctest::Approx(0.0));
  CHECK(l[1].entropy == doctest::Approx(0.0));
  auto u = chain_components(*fixtures::gm_plus_f2());
  REQUIRE(u.size() == 2);
  CHECK(std::abs(u[0].entropy - std::log(2.0)) < 1e-9);
  CHECK(std::abs(u[1].entropy - std::log((1 + std::sqrt(5.0)) / 2)) < 1e-9);
  auto cyc = share(OneStepSft::from_names("C3", {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}));
  CHECK(chain_components(*cyc)[0].period == 3);
  // Transient symbols are dropped.
  auto t = share(OneStepSft::from_names("T", {"a", "b", "c"}, {{"a", "a"}, {"a", "b"}, {"b", "c"}, {"c", "c"}}));
  auto tc = chain_components(*t);
  REQUIRE(tc.size() == 2);
  for (const auto& c : tc) CHECK(c.symbols.size() == 1);
}

TEST_CASE("components partition the recurrent symbols") {
  std::vector<SftPtr> systems{fixtures::gm_plus_f2(), two_f2(), gm_plus_loop(), loops()};
  for (const auto& c : fixtures::random_corpus()) systems.push_back(c.domain_ptr());
  for (const auto& s : systems) {
    CAPTURE(s->name());
    std::vector<int> seen(s->size(), 0);
    for (const auto& c : chain_components(*s))
      for (SymbolId x : c.symbols) ++seen[x];
    for (SymbolId x = 0; x < s->size(); ++x) {
      // x is recurrent iff some closed walk of length <= n passes through it.
      bool recurrent = false;
      for (std::size_t n = 1; n <= s->size() && !recurrent; ++n)
        for (const auto& p : periodic_points(*s, n))
          for (auto v : p.right_cycle) recurrent = recurrent || v == x;
      CHECK(seen[x] == (recurrent ? 1 : 0));
    }
  }
}

TEST_CASE("entropy") {
  CHECK(std::abs(entropy(*fixtures::f2()) - std::log(2.0)) < 1e-9);
  CHECK(std::abs(entropy(*fixtures::gm()) - std::log((1 + std::sqrt(5.0)) / 2)) < 1e-9);
  auto loop = share(OneStepSft::from_names("L", {"a"}, {{"a", "a"}}));
  CHECK(std::abs(entropy(*loop)) < 1e-12);
  for (const auto& c : fixtures::random_corpus()) {
    CAPTURE(c.name());
    CHECK(std::abs(entropy(c.domain()) - oracles::perron_entropy(c.domain())) < 1e-9);
  }
}

TEST_CASE("maximal entropy component") {
  auto m = max_entropy_component(*gm_plus_loop());
  CHECK_FALSE(m.ambiguous);
  CHECK(m.best().name == "a,b");
  auto t = max_entropy_component(*two_f2());
  CHECK(t.ambiguous);
  CHECK(t.maximizers.size() == 2);
  auto g = max_entropy_component(*fixtures::gm());
  CHECK(g.best().induced.sft == *fixtures::gm());
  auto code = OneBlockCode::identity(two_f2());
  CHECK(kind_of([&] { restrict_to_max_entropy(code); }) == ErrorKind::AmbiguousComponent);
  auto empty = share(OneStepSft::from_names("E", {"a", "b"}, {{"a", "b"}}));
  CHECK(kind_of([&] { max_entropy_component(*empty); }) == ErrorKind::EmptyShift);
}

TEST_CASE("periodic points and traces") {
  auto f2 = fixtures::f2();
  auto p1 = periodic_points(*f2, 1);
  CHECK(p1.size() == 2);
  CHECK(std::count(p1.begin(), p1.end(), RayPoint::periodic({0})) == 1);
  CHECK(std::count(p1.begin(), p1.end(), RayPoint::periodic({1})) == 1);
  std::vector<SftPtr> systems{fixtures::gm_plus_f2(), two_f2(), gm_plus_loop(), fixtures::ev_sft()};
  for (const auto& c : fixtures::random_corpus()) systems.push_back(c.domain_ptr());
  for (const auto& s : systems)
    for (std::size_t n = 1; n <= 6; ++n) {
      CAPTURE(s->name());
      CAPTURE(n);
      auto pts = periodic_points(*s, n);
      CHECK(pts.size() == trace_power(*s, n));
      CHECK(pts.size() == oracles::closed_walks(*s, n));
      for (const auto& p : pts) {
        CHECK(is_allowed(*s, p));
        CHECK(p.shifted(static_cast<std::int64_t>(n)) == p);
      }
    }
}

TEST_CASE("periodic preimage counts") {
  auto x = fixtures::xor_code();
  auto ev = fixtures::ev();
  CHECK(preimage_count(x, RayPoint::periodic({0})) == 2);
  CHECK(preimage_count(x, RayPoint::periodic({1})) == 2);
  CHECK(preimage_count(x, RayPoint::periodic({0, 1})) == 2);
  CHECK(preimage_count(ev, RayPoint::periodic({0})) == 1);
  CHECK(preimage_count(ev, RayPoint::periodic({1})) == 2);
  CHECK(preimage_count(ev, RayPoint::periodic({0, 1, 1})) == 1);
  CHECK(kind_of([&] { preimage_count(ev, RayPoint::periodic({0, 1})); }) == ErrorKind::NotInImage);
  CHECK(kind_of([] { preimage_count(fixtures::constant_f2(), RayPoint::periodic({0})); }) ==
        ErrorKind::InfinitePreimage);

  std::vector<OneBlockCode> codes{x, ev, fixtures::ev_split(), fixtures::id(fixtures::gm())};
  for (const auto& c : fixtures::right_resolving_corpus()) codes.push_back(c);
  for (const auto& code : codes)
    for (std::size_t n = 1; n <= 4; ++n)
      for (const auto& y : image_necklaces(code, n)) {
        CAPTURE(code.name());
        CAPTURE(word_string(code.alphabet(), y));
        CHECK(preimage_count(code, RayPoint::periodic(y)) == oracles::periodic_preimages(code, y));
      }
}

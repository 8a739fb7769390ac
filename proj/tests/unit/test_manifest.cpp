#include "doctest.h"

#include <string>

#include "symdyn/error.hpp"
#include "symdyn/manifest.hpp"

using namespace symdyn;

namespace {

std::string fixture(const std::string& name) { return std::string(SYMDYN_FIXTURES) + "/" + name; }

std::string parse_error(const std::string& text) {
  try {
    parse_manifest(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return e.what();
  }
  FAIL("parsed: " << text);
  return {};
}

const char* kSmall = R"(system S
symbols a b
edges a>b b>a
end
code C S -> u
map a:u b:u
end
)";

}  // namespace

TEST_CASE("fixtures load") {
  auto ev = load_manifest(fixture("ev.sdm"));
  CHECK(ev.systems.size() == 3);
  CHECK(ev.codes.size() == 3);
  CHECK(ev.code("EV").domain().size() == 3);
  CHECK(ev.code("EV").alphabet() == std::vector<std::string>{"0", "1"});
  auto x = load_manifest(fixture("xor.sdm"));
  CHECK(x.codes.size() == 3);
  CHECK(x.system("F2B")->edges().size() == 8);
  auto gm = load_manifest(fixture("gm.sdm"));
  CHECK(gm.options.P == 8);
  CHECK(gm.options.L == 12);
  CHECK(gm.system("GMF2")->size() == 4);
}

TEST_CASE("lookups") {
  auto m = parse_manifest(kSmall);
  CHECK(m.code("C").name() == "C");
  try {
    m.code("S");
    FAIL("expected UnknownName");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownName);
  }
  try {
    load_manifest(fixture("missing.sdm"));
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("round trip") {
  for (const char* f : {"ev.sdm", "xor.sdm", "gm.sdm"}) {
    CAPTURE(f);
    auto m = load_manifest(fixture(f));
    std::string printed = print_manifest(m);
    auto again = parse_manifest(printed);
    CHECK(again == m);
    CHECK(print_manifest(again) == printed);
  }
}

TEST_CASE("options") {
  auto m = parse_manifest(std::string(kSmall) + "options P=5 kcap=7\n");
  CHECK(m.options.P == 5);
  CHECK(m.options.k_cap == 7);
  CHECK(m.options.L == kDefaultWordCap);
  CHECK(print_options(m.options).find("P=5") != std::string::npos);
  CHECK(parse_error(std::string(kSmall) + "options Q=1\n").find("line 8") != std::string::npos);
  parse_error(std::string(kSmall) + "options P=x\n");
}

TEST_CASE("parse errors carry the line") {
  CHECK(parse_error("system S\nsymbols a a\nedges a>a\nend\n").find("line 2") != std::string::npos);
  CHECK(parse_error("system S\nsymbols a\nedges a>b\nend\n").find("line 3") != std::string::npos);
  CHECK(parse_error("system S\nsymbols a\nedges a>a a>a\nend\n").find("line 3") != std::string::npos);
  CHECK(parse_error("frobnicate S\n").find("line 1") != std::string::npos);
  parse_error("system S\nsymbols a\nedges a>a\n");                          // no end
  parse_error("code C T -> u\nmap a:u\nend\n");                            // unknown system
  parse_error("system S\nsymbols a b\nedges a>b b>a\nend\ncode C S -> u\nmap a:u\nend\n");  // missing label
  parse_error("system S\nsymbols a\nedges a>a\nend\ncode C S -> u\nmap a:u a:u\nend\n");
  parse_error("system S\nsymbols a\nedges a>a\nend\ncode S S -> u\nmap a:u\nend\n");  // name clash
  parse_error("system S\nsymbols a-b\nedges a-b>a-b\nend\n");
}

TEST_CASE("token charset") {
  CHECK(valid_token("x+y|y"));
  CHECK(valid_token("(a,b)"));
  CHECK(valid_token("q0_a"));
  CHECK_FALSE(valid_token(""));
  CHECK_FALSE(valid_token("a b"));
  CHECK_FALSE(valid_token("a:b"));
  CHECK_FALSE(valid_token("a>b"));
}

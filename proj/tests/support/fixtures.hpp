#ifndef SYMDYN_TESTS_FIXTURES_HPP
#define SYMDYN_TESTS_FIXTURES_HPP

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "symdyn/shift.hpp"

namespace fixtures {

using namespace symdyn;

inline SftPtr f2() { return share(OneStepSft::from_names("F2", {"0", "1"}, {{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}})); }

inline SftPtr gm() { return share(OneStepSft::from_names("GM", {"a", "b"}, {{"a", "a"}, {"a", "b"}, {"b", "a"}})); }

inline SftPtr ev_sft() {
  return share(OneStepSft::from_names("EVG", {"x", "y", "z"},
                                      {{"x", "x"}, {"x", "y"}, {"y", "z"}, {"z", "x"}, {"z", "y"}}));
}

inline OneBlockCode ev() {
  return OneBlockCode::from_names("EV", ev_sft(), {"0", "1"}, {{"x", "0"}, {"y", "1"}, {"z", "1"}});
}

inline OneBlockCode id(const SftPtr& s) { return OneBlockCode::identity(s); }

inline OneBlockCode constant_f2() {
  return OneBlockCode::from_names("CONST", f2(), {"0"}, {{"0", "0"}, {"1", "0"}});
}

inline SlidingBlockCode xor_block_map() {
  SlidingBlockCode c;
  c.name = "XOR";
  c.domain = f2();
  c.anticipation = 1;
  c.alphabet = {"0", "1"};
  for (SymbolId a = 0; a < 2; ++a)
    for (SymbolId b = 0; b < 2; ++b) c.table[{a, b}] = a ^ b;
  return c;
}

inline OneBlockCode xor_code() { return recode_one_block(xor_block_map()).code; }

// EV with x in-split into xa (entered from x) and xb (entered from z).
inline OneBlockCode ev_split() {
  auto s = share(OneStepSft::from_names("EVS", {"xa", "xb", "y", "z"},
                                        {{"xa", "xa"}, {"xb", "xa"}, {"z", "xb"}, {"xa", "y"}, {"xb", "y"},
                                         {"y", "z"}, {"z", "y"}}));
  return OneBlockCode::from_names("EVS", s, {"0", "1"}, {{"xa", "0"}, {"xb", "0"}, {"y", "1"}, {"z", "1"}});
}

// Disjoint union of GM and F2 (symbols renamed apart).
inline SftPtr gm_plus_f2() {
  return share(OneStepSft::from_names("GMF2", {"a", "b", "0", "1"},
                                      {{"a", "a"}, {"a", "b"}, {"b", "a"}, {"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}}));
}

// Random irreducible graph on n symbols with labels from k letters: a
// Hamiltonian cycle plus random extra edges.
inline OneBlockCode random_irreducible(std::mt19937& rng, std::size_t n, std::size_t k, const std::string& name) {
  std::vector<std::string> syms;
  for (std::size_t i = 0; i < n; ++i) syms.push_back("s" + std::to_string(i));
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(syms[perm[i]], syms[perm[(i + 1) % n]]);
  std::bernoulli_distribution extra(0.3);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (extra(rng)) edges.emplace_back(syms[i], syms[j]);
  auto sft = share(OneStepSft::from_names(name, syms, edges));
  std::vector<std::string> letters;
  for (std::size_t l = 0; l < k; ++l) letters.push_back(std::string(1, static_cast<char>('a' + l)));
  std::uniform_int_distribution<std::size_t> pick(0, k - 1);
  std::map<std::string, std::string> labels;
  for (const auto& s : syms) labels[s] = letters[pick(rng)];
  return OneBlockCode::from_names(name, sft, letters, labels);
}

// The seeded corpus shared by the unit and acceptance suites.
inline std::vector<OneBlockCode> random_corpus(std::size_t count = 12, unsigned seed = 20240611) {
  std::mt19937 rng(seed);
  std::vector<OneBlockCode> out;
  std::uniform_int_distribution<std::size_t> size(2, 6), letters(1, 3);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(random_irreducible(rng, size(rng), letters(rng), "R" + std::to_string(i)));
  return out;
}

// Right-resolving labelings (successors of a vertex carry distinct letters),
// hence finite-to-one codes.
inline std::vector<OneBlockCode> right_resolving_corpus(std::size_t count = 12, unsigned seed = 20240612) {
  std::mt19937 rng(seed);
  std::vector<OneBlockCode> out;
  std::uniform_int_distribution<std::size_t> size(2, 6);
  while (out.size() < count) {
    std::string name = "RR" + std::to_string(out.size());
    OneBlockCode base = random_irreducible(rng, size(rng), 1, name);
    const OneStepSft& d = base.domain();
    std::size_t k = 1;
    for (SymbolId x = 0; x < d.size(); ++x) k = std::max(k, d.successors(x).size());
    k += std::uniform_int_distribution<std::size_t>(0, 1)(rng);
    std::vector<std::string> letters;
    for (std::size_t l = 0; l < k; ++l) letters.push_back(std::string(1, static_cast<char>('a' + l)));
    std::vector<int> label(d.size(), -1);
    bool ok = true;
    std::vector<SymbolId> order(d.size());
    for (SymbolId x = 0; x < d.size(); ++x) order[x] = x;
    std::shuffle(order.begin(), order.end(), rng);
    for (SymbolId x : order) {
      std::vector<bool> used(k, false);
      for (SymbolId p : d.predecessors(x))
        for (SymbolId y : d.successors(p))
          if (label[y] >= 0) used[label[y]] = true;
      std::vector<int> free;
      for (std::size_t l = 0; l < k; ++l)
        if (!used[l]) free.push_back(static_cast<int>(l));
      if (free.empty()) {
        ok = false;
        break;
      }
      label[x] = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
    }
    if (!ok) continue;
    std::map<std::string, std::string> labels;
    for (SymbolId x = 0; x < d.size(); ++x) labels[d.symbol_name(x)] = letters[label[x]];
    out.push_back(OneBlockCode::from_names(name, base.domain_ptr(), letters, labels));
  }
  return out;
}

}  // namespace fixtures

#endif  // SYMDYN_TESTS_FIXTURES_HPP

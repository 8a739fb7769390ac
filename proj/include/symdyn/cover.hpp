#ifndef SYMDYN_COVER_HPP
#define SYMDYN_COVER_HPP

// Canonical extension of a sofic image: the past-subset automaton, the
// common-future table, E-sets and the cover SFT over symbols (v, i).

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/shift.hpp"

namespace symdyn {

inline constexpr std::size_t kDefaultSubsetCap = 4096;

// Deterministic automaton on the subsets of domain symbols that terminate a
// presentation of some left-infinite label ray.
struct PastSubsetAutomaton {
  std::vector<SymbolSet> states;  // sorted by name
  std::vector<std::string> names;  // members joined with "+"
  // next[state][letter], absent when the letter cannot follow.
  std::vector<std::vector<std::optional<std::size_t>>> next;

  std::optional<std::size_t> find(const SymbolSet& set) const;
};

PastSubsetAutomaton past_subset_automaton(const OneBlockCode& code, std::size_t cap = kDefaultSubsetCap);

// cf(i, j): some successor of i and some successor of j start right-infinite
// paths with equal labels.
class CommonFutureTable {
 public:
  CommonFutureTable() = default;
  explicit CommonFutureTable(const OneBlockCode& code);
  bool operator()(SymbolId i, SymbolId j) const { return table_.at(i * n_ + j); }

 private:
  std::size_t n_ = 0;
  std::vector<bool> table_;
};

bool common_future(const OneBlockCode& code, SymbolId i, SymbolId j);

SymbolSet e_set(const OneBlockCode& code, const SymbolSet& subset, SymbolId i);
SymbolSet e_set(const CommonFutureTable& cf, const SymbolSet& subset, SymbolId i);

struct CoverSymbol {
  SymbolSet v;
  SymbolId i = 0;
  friend auto operator<=>(const CoverSymbol&, const CoverSymbol&) = default;
};

std::string subset_name(const OneStepSft& domain, const SymbolSet& set);
std::string cover_symbol_name(const OneStepSft& domain, const CoverSymbol& symbol);

struct CoverSft {
  OneBlockCode code;                 // the presented code
  PastSubsetAutomaton automaton;
  CommonFutureTable common_future;
  SftPtr sft;                        // the cover
  std::vector<CoverSymbol> symbols;  // parallel to sft ids
  OneBlockCode base_code;            // (v, i) -> label(i)

  std::optional<SymbolId> find(const CoverSymbol& symbol) const;
};

CoverSft build_cover(const OneBlockCode& code, std::size_t cap = kDefaultSubsetCap);

// The cover point w with w_k = (e_set(S_k, s_k), s_k), S_k the past subset of
// the label ray ending at coordinate k.
RayPoint canonical_associate(const CoverSft& cover, const RayPoint& s);

}  // namespace symdyn

#endif  // SYMDYN_COVER_HPP

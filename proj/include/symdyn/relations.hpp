#ifndef SYMDYN_RELATIONS_HPP
#define SYMDYN_RELATIONS_HPP

// Pair-relation SFTs, unstable-language comparison, forward closedness,
// resolving checks and quotient presentations.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symdyn/cover.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

enum class RelationKind { PairOfCode, Alpha, Theta, Diagonal, Custom };

std::string_view relation_kind_name(RelationKind kind);

// SFT over ordered pairs of base symbols, named "(a,b)".
struct RelationSft {
  SftPtr sft;
  SftPtr base;
  RelationKind kind = RelationKind::Custom;
  std::vector<Edge> pairs;  // parallel to sft ids

  std::optional<SymbolId> find(SymbolId a, SymbolId b) const;
};

std::string pair_name(const OneStepSft& base, SymbolId a, SymbolId b);

// Label-equal pairs with componentwise transitions, untrimmed.
RelationSft pair_graph(const OneBlockCode& code);
// The same, trimmed essential.
RelationSft pair_relation(const OneBlockCode& code);
RelationSft diagonal_relation(const SftPtr& base);
// Pairs of `sup` satisfying `keep`, trimmed essential.
RelationSft restrict_relation(const RelationSft& sup, const std::function<bool(SymbolId, SymbolId)>& keep,
                              RelationKind kind);

// Future-label language readable from the successors of v.
struct UnstablePrefixLanguage {
  SymbolSet source;
  SymbolSet start;
};

UnstablePrefixLanguage unstable_prefix_language(const OneBlockCode& code, const SymbolSet& v);
bool ul_equal(const OneBlockCode& code, const SymbolSet& v, const SymbolSet& w);

RelationSft relation_e_alpha(const CoverSft& cover);
RelationSft relation_e_theta(const CoverSft& cover);

// Ids are symbols of sup. The cycle lies in sub, the path runs from
// cycle[0] to exit.first inside sub, and exit leaves sub.
struct ClosureWitness {
  std::vector<SymbolId> cycle;
  std::vector<SymbolId> path;
  Edge exit;
};

struct ForwardClosedResult {
  bool closed = true;
  std::optional<ClosureWitness> witness;
};

ForwardClosedResult forward_closed(const RelationSft& sub, const RelationSft& sup);

enum class Direction { U, S };

struct ResolvingResult {
  bool resolving = true;
  // Two distinct domain points with equal image, equal on all coordinates
  // below 0 (direction u) or above 0 (direction s).
  std::optional<std::pair<RayPoint, RayPoint>> witness;
};

ResolvingResult resolving_check(const OneBlockCode& code, Direction dir);

struct QuotientPresentation {
  CoverSft cover;
  RelationSft relation;
  std::vector<std::uint32_t> class_map;  // cover symbol -> class id
  std::vector<SymbolSet> classes;        // class id -> cover symbols
  OneBlockCode code;                     // class graph with induced labels
};

QuotientPresentation quotient_presentation(const CoverSft& cover, RelationKind kind);

// Minimal right-resolving presentation of the image, as a vertex-labeled
// graph whose symbols are the edges "q<k>_<letter>" of the minimal automaton.
OneBlockCode fischer_cover(const OneBlockCode& code, std::size_t cap = kDefaultSubsetCap);

// Maximal-entropy component of the alpha quotient of build_cover(code).
OneBlockCode alpha_extension(const OneBlockCode& code, std::size_t cap = kDefaultSubsetCap);

}  // namespace symdyn

#endif  // SYMDYN_RELATIONS_HPP

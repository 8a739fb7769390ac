#ifndef SYMDYN_FIBER_HPP
#define SYMDYN_FIBER_HPP

// Fiber products, the minimal u-resolving lift, constant-to-one checks and
// commuting lift squares.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/degree.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

struct FiberProduct {
  SftPtr sft;               // symbols "(x,z)"
  std::vector<Edge> pairs;  // parallel to sft ids
  OneBlockCode proj_a;      // letters are symbols of a's domain
  OneBlockCode proj_b;
};

FiberProduct fiber_product(const OneBlockCode& a, const OneBlockCode& b);

struct InjectivityResult {
  bool injective = true;
  std::optional<Edge> witness;  // a nondiagonal essential pair
};

InjectivityResult injectivity_check(const OneBlockCode& code);

struct CommuteResult {
  bool commutes = true;
  std::optional<std::vector<SymbolId>> witness;  // domain word
  std::size_t max_length = 0;
  std::size_t words_checked = 0;
};

// Compose each path left to right (first arrow applied first) and compare
// the composites symbol-wise and on every domain word of length <= L.
CommuteResult commuting_check(const std::vector<OneBlockCode>& left, const std::vector<OneBlockCode>& right,
                              std::size_t L = kDefaultWordCap);

OneBlockCode compose_path(const std::vector<OneBlockCode>& path);

struct MinimalLift {
  OneBlockCode cover;  // the alpha presentation of the image
  OneBlockCode rho1;   // component of the fiber product -> X
  OneBlockCode rho2;   // component -> cover
  std::size_t fiber_symbols = 0;
  int memory = 0;
  int anticipation = 0;
  OneBlockCode beta;   // on X, or on its higher block presentation
  OneBlockCode alpha_on_beta_domain;
  CommuteResult commute;  // alpha = cover o beta
};

MinimalLift minimal_lift(const OneBlockCode& alpha, const OneBlockCode& cover, std::size_t L = kDefaultWordCap,
                         std::size_t max_window = 5);

struct ConstantToOne {
  std::uint64_t k = 0;
  std::size_t points_checked = 0;
  std::uint32_t P = kDefaultPeriodCap;
};

ConstantToOne constant_to_one_check(const OneBlockCode& code, std::uint32_t P = kDefaultPeriodCap);

struct DiagramArrow {
  std::string name;
  std::string source;
  std::string target;
  OneBlockCode code;
  std::map<std::string, bool> tags;
};

struct FiberDiagram {
  std::vector<std::string> nodes;
  std::vector<DiagramArrow> arrows;
  std::vector<std::pair<std::string, CommuteResult>> commutations;
  std::vector<std::string> failures;
  std::size_t L = kDefaultWordCap;

  bool verified() const { return failures.empty(); }
  const DiagramArrow& arrow(const std::string& name) const;
};

// Square  X~ -> Y~  over  X -> Y  with u-resolving verticals and an
// s-resolving top.
FiberDiagram lift_diagram(const OneBlockCode& pi, std::size_t L = kDefaultWordCap);

}  // namespace symdyn

#endif  // SYMDYN_FIBER_HPP

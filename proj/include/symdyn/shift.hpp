#ifndef SYMDYN_SHIFT_HPP
#define SYMDYN_SHIFT_HPP

// Finite presentations of one-step shifts of finite type, vertex-labeled
// (1-block) factor codes, sliding block codes, eventually periodic points and
// the word-level language queries built on them.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symdyn {

using SymbolId = std::uint32_t;
using LetterId = std::uint32_t;

// Sorted, duplicate-free list of symbol ids.
using SymbolSet = std::vector<SymbolId>;

using Edge = std::pair<SymbolId, SymbolId>;

// Vertex shift on a finite directed graph. Symbols are kept sorted by name so
// that every enumeration derived from a shift is deterministic; SymbolId is
// the position in that order.
class OneStepSft {
 public:
  OneStepSft() = default;

  // Symbol names must be unique; edges must reference declared names.
  static OneStepSft from_names(std::string name, std::vector<std::string> symbols,
                               const std::vector<std::pair<std::string, std::string>>& edges);

  // Symbols in arbitrary order; `old_to_new`, when given, receives the
  // permutation applied to sort them.
  static OneStepSft from_indexed(std::string name, std::vector<std::string> symbols,
                                 const std::vector<Edge>& edges,
                                 std::vector<SymbolId>* old_to_new = nullptr);

  const std::string& name() const { return name_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  const std::string& symbol_name(SymbolId s) const { return symbols_.at(s); }
  const std::vector<std::string>& symbol_names() const { return symbols_; }
  std::optional<SymbolId> find(std::string_view symbol) const;
  SymbolId at(std::string_view symbol) const;  // throws UnknownName

  std::span<const SymbolId> successors(SymbolId s) const { return succ_.at(s); }
  std::span<const SymbolId> predecessors(SymbolId s) const { return pred_.at(s); }
  bool has_edge(SymbolId from, SymbolId to) const;
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  bool is_essential() const;
  SymbolSet all_symbols() const;

  OneStepSft renamed(std::string name) const;
  // Same symbols, every edge reversed (time reversal).
  OneStepSft transposed() const;

  friend bool operator==(const OneStepSft& a, const OneStepSft& b) {
    return a.symbols_ == b.symbols_ && a.succ_ == b.succ_;
  }

 private:
  std::string name_;
  std::vector<std::string> symbols_;
  std::vector<std::vector<SymbolId>> succ_;
  std::vector<std::vector<SymbolId>> pred_;
};

using SftPtr = std::shared_ptr<const OneStepSft>;

inline SftPtr share(OneStepSft sft) { return std::make_shared<const OneStepSft>(std::move(sft)); }

// Sub-shift induced on a subset of symbols, plus the embedding back into
// the parent. Sorted order is inherited, so ids stay monotone.
struct InducedSft {
  OneStepSft sft;
  std::vector<SymbolId> to_parent;
  std::vector<std::optional<SymbolId>> from_parent;
};

InducedSft induced(const OneStepSft& sft, const std::vector<bool>& keep, std::string name = {});

// Largest sub-shift in which every symbol has a predecessor and a successor.
InducedSft trim_essential_induced(const OneStepSft& sft);
OneStepSft trim_essential(const OneStepSft& sft);

// Symbol-labeling code onto a sofic image. Labels index into a sorted
// alphabet of letter names.
class OneBlockCode {
 public:
  OneBlockCode() = default;
  OneBlockCode(std::string name, SftPtr domain, std::vector<std::string> alphabet,
               std::vector<LetterId> labels);

  static OneBlockCode from_names(std::string name, SftPtr domain, std::vector<std::string> alphabet,
                                 const std::map<std::string, std::string>& mapping);
  static OneBlockCode identity(SftPtr domain, std::string name = {});

  const std::string& name() const { return name_; }
  const OneStepSft& domain() const { return *domain_; }
  const SftPtr& domain_ptr() const { return domain_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<LetterId>& labels() const { return labels_; }
  LetterId label(SymbolId s) const { return labels_.at(s); }
  const std::string& letter_name(LetterId l) const { return alphabet_.at(l); }
  std::optional<LetterId> find_letter(std::string_view letter) const;

  OneBlockCode renamed(std::string name) const;
  // Same labels on the time-reversed domain.
  OneBlockCode transposed() const;
  // Restrict to an induced sub-shift of the domain.
  OneBlockCode restricted(const InducedSft& sub) const;

 private:
  std::string name_;
  SftPtr domain_;
  std::vector<std::string> alphabet_;
  std::vector<LetterId> labels_;
};

// Sliding block code with memory m and anticipation a: the output at
// coordinate k depends on x[k-m, k+a]. The table covers every allowed
// window of the domain.
struct SlidingBlockCode {
  std::string name;
  SftPtr domain;
  int memory = 0;
  int anticipation = 0;
  std::vector<std::string> alphabet;
  std::map<std::vector<SymbolId>, LetterId> table;

  std::size_t window() const { return static_cast<std::size_t>(memory + anticipation + 1); }
  static SlidingBlockCode from_one_block(const OneBlockCode& code);
  // Evaluate on a domain word; output has length |word| - m - a.
  std::vector<LetterId> apply(std::span<const SymbolId> word) const;
};

// Finite word with an explicit starting coordinate.
struct Word {
  std::vector<std::uint32_t> items;
  std::int64_t start = 0;

  std::size_t size() const { return items.size(); }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

// Bi-infinite eventually periodic sequence
//   ... L L L | T | R R R ...
// where the first entry of T (or of R when T is empty) sits at base index 0
// and coordinate k of the point reads base index k + origin.
struct RayPoint {
  std::vector<std::uint32_t> left_cycle;
  std::vector<std::uint32_t> transient;
  std::vector<std::uint32_t> right_cycle;
  std::int64_t origin = 0;

  static RayPoint periodic(std::vector<std::uint32_t> cycle, std::int64_t origin = 0);

  std::uint32_t at(std::int64_t k) const;
  std::vector<std::uint32_t> window(std::int64_t from, std::int64_t to) const;  // [from, to)
  // sigma^k: (shift(x, k))_i = x_{i+k}.
  RayPoint shifted(std::int64_t k) const;
  // x'_i = x_{-i}.
  RayPoint reversed() const;
  // Primitive cycles, shortest transient, origin reduced for periodic points.
  RayPoint normalized() const;
  bool is_periodic() const;
  // Coordinates below this are on the left cycle; at or above right_start()
  // they are on the right cycle.
  std::int64_t left_end() const { return -origin; }
  std::int64_t right_start() const { return static_cast<std::int64_t>(transient.size()) - origin; }

  friend bool operator==(const RayPoint& a, const RayPoint& b);
};

bool is_allowed(const OneStepSft& sft, const RayPoint& point);

// Higher block presentation: symbols are the allowed n-blocks; the returned
// code (block -> first symbol) is a conjugacy back onto `sft`.
struct HigherBlock {
  SftPtr sft;
  std::vector<std::vector<SymbolId>> blocks;  // parallel to sft symbols
  OneBlockCode conjugacy;
};

HigherBlock higher_block(const OneStepSft& sft, std::size_t n);

struct Recoded {
  HigherBlock presentation;
  OneBlockCode code;
};

// Turn a sliding block code into a 1-block code on the (m+a+1)-block
// presentation of its domain.
Recoded recode_one_block(const SlidingBlockCode& code);

bool accepts(const OneStepSft& sft, std::span<const SymbolId> word);
bool accepts(const OneBlockCode& code, std::span<const LetterId> word);
std::vector<std::vector<SymbolId>> enumerate_words(const OneStepSft& sft, std::size_t n);
std::vector<std::vector<LetterId>> enumerate_words(const OneBlockCode& code, std::size_t n);

// Splice: agrees with t on coordinates >= 0 and with t_prime on <= 0.
RayPoint bracket(const RayPoint& t, const RayPoint& t_prime);

// Label each symbol of `first` by `second` applied to the letter name. The
// alphabet of `first` must name symbols of `second`'s domain.
OneBlockCode compose_codes(const OneBlockCode& first, const OneBlockCode& second);
RayPoint apply_code(const OneBlockCode& code, const RayPoint& point);

struct ImageComparison {
  bool equal = false;
  std::optional<std::vector<std::string>> separating_word;
};

// Equality of the two sofic images, decided by subset-construction
// determinization of both labeled graphs and a product search.
ImageComparison image_equal(const OneBlockCode& a, const OneBlockCode& b);

// Label-preserving graph isomorphism (labels compared by letter name).
// Returns the symbol map a -> b.
std::optional<std::vector<SymbolId>> find_isomorphism(const OneBlockCode& a, const OneBlockCode& b);
std::optional<std::vector<SymbolId>> find_isomorphism(const OneStepSft& a, const OneStepSft& b);

std::string join_names(const OneStepSft& sft, std::span<const SymbolId> symbols, std::string_view sep);
std::string word_string(const std::vector<std::string>& names, std::span<const std::uint32_t> word);
std::string point_string(const std::vector<std::string>& names, const RayPoint& point);

}  // namespace symdyn

#endif  // SYMDYN_SHIFT_HPP

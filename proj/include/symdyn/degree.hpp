#ifndef SYMDYN_DEGREE_HPP
#define SYMDYN_DEGREE_HPP

// Finite-to-one analysis: diamonds, related word families, the magic
// constant K, the degree d, the minimal periodic preimage count D, the
// permutation at a magic word, and stable collisions.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symdyn/shift.hpp"

namespace symdyn {

inline constexpr std::uint32_t kDefaultPeriodCap = 8;
inline constexpr std::uint32_t kDefaultWordCap = 12;

// Two distinct equal-label paths with common first and last symbols.
struct Diamond {
  std::vector<SymbolId> top;
  std::vector<SymbolId> bottom;
};

struct FiniteToOneResult {
  bool finite_to_one = true;
  std::optional<Diamond> witness;
};

FiniteToOneResult finite_to_one_check(const OneBlockCode& code);

// Pair graph of the code with extendability flags, shared by the word-level
// queries below.
class Relatedness {
 public:
  explicit Relatedness(const OneBlockCode& code);

  const OneBlockCode& code() const { return code_; }
  std::size_t pair_count() const { return pair_count_; }
  // Words are domain symbol sequences on a common window.
  bool related(std::span<const SymbolId> w, std::span<const SymbolId> v) const;
  // Every word related to `seed`, sorted.
  std::vector<std::vector<SymbolId>> related_words(std::span<const SymbolId> seed) const;

 private:
  std::int64_t pair_id(SymbolId a, SymbolId b) const { return ids_[a * n_ + b]; }

  OneBlockCode code_;
  std::size_t n_ = 0;
  std::size_t pair_count_ = 0;
  std::vector<std::int64_t> ids_;
  std::vector<std::vector<bool>> edge_;  // by pair id; dense, desk scale
  std::vector<bool> past_;               // admits a left-infinite pair path
  std::vector<bool> future_;             // admits a right-infinite pair path
};

bool words_related(const OneBlockCode& code, const Word& w, const Word& v);

// Default cap on K: the number of label-equal symbol pairs, squared.
std::size_t default_k_cap(const OneBlockCode& code);
std::size_t magic_constant(const OneBlockCode& code, std::optional<std::size_t> cap = std::nullopt);

struct RelatedWordFamily {
  std::int64_t m = 0;
  std::int64_t n = 0;
  Word seed;
  std::vector<Word> members;  // sorted
  std::vector<std::size_t> degrees_by_column;  // column m + j at index j

  std::size_t degree() const;
  // First column (as a coordinate) attaining the degree.
  std::int64_t magic_column() const;
};

RelatedWordFamily related_family(const OneBlockCode& code, const Word& seed, std::int64_t m, std::int64_t n,
                                 std::size_t K);

struct DegreeResult {
  std::size_t K = 0;
  std::size_t radius = 0;  // seeds span [-radius, radius]
  std::size_t d = 0;
  RelatedWordFamily family;
};

// Minimal family degree over seeds on [-radius, radius]; radius defaults to K.
DegreeResult degree(const OneBlockCode& code, std::optional<std::size_t> k_cap = std::nullopt,
                    std::optional<std::size_t> radius = std::nullopt);

struct MagicPermutation {
  std::int64_t from_column = 0;
  std::int64_t to_column = 0;
  std::vector<SymbolId> u;  // connecting domain word
  std::vector<std::pair<SymbolId, SymbolId>> mapping;  // sorted by source
  bool is_identity() const;
};

// Permutation of the degree-d symbols at the magic column of `family`,
// followed through w u w. The connecting word is searched when absent.
MagicPermutation magic_permutation(const OneBlockCode& code, const RelatedWordFamily& family, std::size_t K,
                                   std::optional<std::vector<SymbolId>> u = std::nullopt);

struct PreimageMinimum {
  std::uint64_t D = 0;
  RayPoint point;  // an image point attaining D
  std::size_t points_checked = 0;
};

// Minimum preimage count over image periodic points of period <= P.
PreimageMinimum min_periodic_preimages(const OneBlockCode& code, std::uint32_t P = kDefaultPeriodCap);

// Primitive label cycles of length n (least rotations) whose periodic points
// lie in the image.
std::vector<std::vector<LetterId>> image_necklaces(const OneBlockCode& code, std::size_t n);

struct MagicData {
  std::size_t K = 0;
  std::size_t d = 0;
  std::uint64_t D = 0;
  std::uint32_t P = kDefaultPeriodCap;
  std::size_t radius = 0;
  RelatedWordFamily family;
  MagicPermutation permutation;
  RayPoint minimizing_point;
};

MagicData verify_d_equals_D(const OneBlockCode& code, std::uint32_t P = kDefaultPeriodCap,
                            std::optional<std::size_t> k_cap = std::nullopt);

struct StableCollision {
  RayPoint t;
  RayPoint t_prime;
};

// t != t' with equal image and equal right tails.
std::optional<StableCollision> stable_collision(const OneBlockCode& code);

}  // namespace symdyn

#endif  // SYMDYN_DEGREE_HPP

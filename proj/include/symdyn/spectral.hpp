#ifndef SYMDYN_SPECTRAL_HPP
#define SYMDYN_SPECTRAL_HPP

// Spectral decomposition of an SFT into irreducible components, Perron
// entropy, and periodic-point counts.

#include <cstdint>
#include <string>
#include <vector>

#include "symdyn/shift.hpp"

namespace symdyn {

inline constexpr double kEntropyTieBand = 1e-7;

struct ChainComponent {
  std::string name;  // member names joined with ","
  SymbolSet symbols;
  InducedSft induced;
  double entropy = 0.0;
  std::uint32_t period = 1;
};

// Strongly connected pieces carrying an edge, by descending entropy then name.
std::vector<ChainComponent> chain_components(const OneStepSft& sft);

// log of the Perron root of an irreducible adjacency matrix.
double entropy(const OneStepSft& irreducible);

struct MaxEntropy {
  std::vector<ChainComponent> maximizers;  // every component within the tie band
  bool ambiguous = false;
  const ChainComponent& best() const { return maximizers.front(); }
};

MaxEntropy max_entropy_component(const OneStepSft& sft);

// Restrict a code to the unique maximal-entropy component of its domain;
// AmbiguousComponent on ties.
OneBlockCode restrict_to_max_entropy(const OneBlockCode& code);

// Points x with sigma^n x = x, one per closed walk of length n.
std::vector<RayPoint> periodic_points(const OneStepSft& sft, std::size_t n);
// trace(A^n), exact.
std::uint64_t trace_power(const OneStepSft& sft, std::size_t n);

// Number of periodic domain points over the periodic image point y (letters
// of the code). InfinitePreimage when that number is unbounded.
std::uint64_t preimage_count(const OneBlockCode& code, const RayPoint& y);

}  // namespace symdyn

#endif  // SYMDYN_SPECTRAL_HPP

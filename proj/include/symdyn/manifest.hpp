#ifndef SYMDYN_MANIFEST_HPP
#define SYMDYN_MANIFEST_HPP

// Line-oriented manifest format:
//
//   system <name>
//   symbols <s1> <s2> ...
//   edges <a>><b> ...
//   end
//   code <name> <system> -> <l1> <l2> ...
//   map <sym>:<letter> ...
//   end
//   options P=8 L=12 kcap=0 subset_cap=4096
//
// Blank lines and '#' comments are ignored.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "symdyn/cover.hpp"
#include "symdyn/degree.hpp"
#include "symdyn/shift.hpp"

namespace symdyn {

struct ManifestOptions {
  std::uint32_t P = kDefaultPeriodCap;
  std::size_t L = kDefaultWordCap;
  std::size_t k_cap = 0;  // 0: pair count squared
  std::size_t subset_cap = kDefaultSubsetCap;

  friend bool operator==(const ManifestOptions&, const ManifestOptions&) = default;
};

struct Manifest {
  std::map<std::string, SftPtr> systems;
  std::map<std::string, OneBlockCode> codes;
  ManifestOptions options;

  const SftPtr& system(const std::string& name) const;  // UnknownName
  const OneBlockCode& code(const std::string& name) const;

  friend bool operator==(const Manifest& a, const Manifest& b);
};

// Names, symbols and letters: [A-Za-z0-9_+|(),.*/^\[\]]+ (derived objects
// such as cover symbols "x+y|y" stay printable).
bool valid_token(std::string_view s);

Manifest parse_manifest(std::string_view text);  // ParseError "line N, column C: ..."
Manifest load_manifest(const std::string& path);

// Canonical form: systems then codes by name, symbols sorted, edges sorted,
// options always present.
std::string print_manifest(const Manifest& m);
std::string print_system(const OneStepSft& sft);
std::string print_code(const OneBlockCode& code);
std::string print_options(const ManifestOptions& o);

}  // namespace symdyn

#endif  // SYMDYN_MANIFEST_HPP

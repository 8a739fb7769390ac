#ifndef SYMDYN_REPORT_HPP
#define SYMDYN_REPORT_HPP

// Command runner behind the CLI. A report is a list of system/code blocks in
// the manifest grammar followed by a summary block of key: value lines.

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "symdyn/error.hpp"
#include "symdyn/manifest.hpp"

namespace symdyn {

std::string_view version();

using ReportValue = std::variant<bool, std::int64_t, double, std::string>;

struct Report {
  std::vector<std::variant<SftPtr, OneBlockCode>> blocks;
  std::vector<std::pair<std::string, ReportValue>> summary;
  int exit_code = 0;

  template <class T>
  void add(std::string key, const T& value) {
    if constexpr (std::is_same_v<T, bool>)
      put(std::move(key), value);
    else if constexpr (std::is_integral_v<T>)
      put(std::move(key), static_cast<std::int64_t>(value));
    else if constexpr (std::is_floating_point_v<T>)
      put(std::move(key), static_cast<double>(value));
    else
      put(std::move(key), std::string(value));
  }
  void put(std::string key, ReportValue value);

  std::string text() const;
  std::string json() const;  // flat object, keys in report order
};

// Exit codes: 0 property holds, 1 property fails or domain error, 2 input error.
int exit_code_for(ErrorKind kind);

// args[0] is the command; the rest are its arguments.
Report run_command(const Manifest& manifest, const std::vector<std::string>& args);

}  // namespace symdyn

#endif  // SYMDYN_REPORT_HPP

// symdyn [options] <manifest> <command> [args...]

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symdyn/symdyn.h"

namespace {

int input_error(const std::string& msg) {
  std::cerr << "symdyn: " << msg << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic dynamics toolkit.\n\nCommands: validate, spectral <sys>, cover <code> --relation alpha|theta,\n"
               "fischer <code>, resolving <code> --dir u|s, degree <code>, fiber <a> <b>,\nminlift <alpha> <cover>, "
               "lift <pi>, commute <f1,f2=g1,g2>",
               "symdyn"};
  bool json = false, show_version = false;
  std::optional<std::uint64_t> P, L, kcap, subset_cap;
  app.add_flag("--json", json, "Emit the report as a flat JSON object");
  app.add_flag("--version", show_version, "Print the version and exit");
  app.add_option("--P", P, "Period cap for periodic-point checks");
  app.add_option("--L", L, "Word length for commuting checks");
  app.add_option("--kcap", kcap, "Cap on the magic constant K (0: automatic)");
  app.add_option("--subset-cap", subset_cap, "Cap on past-subset automaton states");
  app.prefix_command();
  app.footer("Exit status: 0 property holds, 1 property fails, 2 input error.");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (show_version) {
    std::cout << "symdyn " << sd_version() << "\n";
    return 0;
  }

  std::vector<std::string> rest;
  for (auto& a : app.remaining()) {
    if (a == "--json")
      json = true;
    else
      rest.push_back(a);
  }
  if (rest.size() < 2) return input_error("expected <manifest> <command> [args...]; see --help");

  sd_manifest* m = nullptr;
  if (sd_manifest_load(rest[0].c_str(), &m) != SD_OK) return input_error(sd_last_error());
  const std::pair<const char*, std::optional<std::uint64_t>*> overrides[] = {
      {"P", &P}, {"L", &L}, {"kcap", &kcap}, {"subset_cap", &subset_cap}};
  for (auto [key, value] : overrides)
    if (*value && sd_manifest_set_option(m, key, **value) != SD_OK) {
      std::string msg = sd_last_error();
      sd_manifest_free(m);
      return input_error(msg);
    }

  std::vector<const char*> cargs;
  for (std::size_t k = 1; k < rest.size(); ++k) cargs.push_back(rest[k].c_str());
  char* report = nullptr;
  int code = 2;
  sd_status st = sd_run(m, static_cast<int>(cargs.size()), cargs.data(), json ? 1 : 0, &report, &code);
  sd_manifest_free(m);
  if (st != SD_OK) return input_error(sd_last_error());
  std::fputs(report, stdout);
  sd_string_free(report);
  return code;
}

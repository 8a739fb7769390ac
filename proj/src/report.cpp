#include "symdyn/report.hpp"

#include <cstdio>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symdyn/cover.hpp"
#include "symdyn/degree.hpp"
#include "symdyn/fiber.hpp"
#include "symdyn/relations.hpp"
#include "symdyn/spectral.hpp"

#ifndef SYMDYN_VERSION
#define SYMDYN_VERSION "0.0.0"
#endif

namespace symdyn {

std::string_view version() { return SYMDYN_VERSION; }

namespace {

std::string value_text(const ReportValue& v) {
  if (auto b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (auto i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (auto d = std::get_if<double>(&v)) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", *d);
    return buf;
  }
  return std::get<std::string>(v);
}

std::string joined(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += sep;
    out += items[k];
  }
  return out;
}

std::string points_text(const OneStepSft& dom, const std::pair<RayPoint, RayPoint>& w) {
  return point_string(dom.symbol_names(), w.first) + " vs " + point_string(dom.symbol_names(), w.second);
}

std::optional<std::size_t> k_cap_of(const Manifest& m) {
  if (m.options.k_cap == 0) return std::nullopt;
  return m.options.k_cap;
}

// Subcommand parsers. Each returns the exit code.

int cmd_validate(const Manifest& m, Report& r) {
  for (const auto& [name, s] : m.systems) r.blocks.emplace_back(s);
  for (const auto& [name, c] : m.codes) r.blocks.emplace_back(c);
  r.add("systems", m.systems.size());
  r.add("codes", m.codes.size());
  for (const auto& [name, s] : m.systems) r.add("essential." + name, s->is_essential());
  return 0;
}

int cmd_spectral(const Manifest& m, Report& r, const std::string& sys) {
  const SftPtr& s = m.system(sys);
  auto comps = chain_components(*s);
  r.add("components", comps.size());
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto& c = comps[k];
    std::string name = sys + ".c" + std::to_string(k);
    r.blocks.emplace_back(share(c.induced.sft.renamed(name)));
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", c.entropy);
    r.add("component." + name, "symbols={" + c.name + "} entropy=" + buf + " period=" + std::to_string(c.period));
  }
  MaxEntropy mx = max_entropy_component(*s);
  r.add("entropy", mx.best().entropy);
  std::vector<std::string> best;
  for (const auto& c : mx.maximizers) best.push_back("{" + c.name + "}");
  r.add("max_component", joined(best, " "));
  r.add("ambiguous", mx.ambiguous);
  std::vector<std::string> traces;
  for (std::size_t n = 1; n <= 6; ++n) traces.push_back(std::to_string(trace_power(*s, n)));
  r.add("periodic_counts", joined(traces, " "));
  return 0;
}

int cmd_cover(const Manifest& m, Report& r, const std::string& name, const std::string& relation) {
  const OneBlockCode& code = m.code(name);
  CoverSft cov = build_cover(code, m.options.subset_cap);
  RelationKind kind = relation == "alpha" ? RelationKind::Alpha : RelationKind::Theta;
  QuotientPresentation q = quotient_presentation(cov, kind);
  r.blocks.emplace_back(cov.sft);
  r.blocks.emplace_back(cov.base_code);
  r.blocks.emplace_back(q.code.domain_ptr());
  r.blocks.emplace_back(q.code);
  r.add("past_subsets", cov.automaton.states.size());
  r.add("cover_symbols", cov.sft->size());
  r.add("relation", relation);
  r.add("relation_pairs", q.relation.pairs.size());
  r.add("classes", q.classes.size());
  for (std::size_t k = 0; k < q.classes.size(); ++k) {
    std::vector<std::string> members;
    for (SymbolId s : q.classes[k]) members.push_back(cov.sft->symbol_name(s));
    r.add("class." + q.code.domain().symbol_name(static_cast<SymbolId>(k)), joined(members, " "));
  }
  RelationSft sup = pair_relation(cov.base_code);
  ForwardClosedResult fc = forward_closed(q.relation, sup);
  r.add("forward_closed", fc.closed);
  if (fc.witness) {
    const auto& names = sup.sft->symbol_names();
    const auto& w = *fc.witness;
    r.add("closure_witness", "cycle " + word_string(names, w.cycle) + " path " + word_string(names, w.path) +
                                 " exit " + names[w.exit.first] + ">" + names[w.exit.second]);
  }
  ResolvingResult res = resolving_check(q.code, Direction::U);
  r.add("u-resolving", res.resolving);
  if (res.witness) r.add("witness", points_text(q.code.domain(), *res.witness));
  return fc.closed && res.resolving ? 0 : 1;
}

int cmd_fischer(const Manifest& m, Report& r, const std::string& name) {
  const OneBlockCode& code = m.code(name);
  OneBlockCode f = fischer_cover(code, m.options.subset_cap);
  OneBlockCode ax = alpha_extension(code, m.options.subset_cap);
  r.blocks.emplace_back(f.domain_ptr());
  r.blocks.emplace_back(f);
  r.add("fischer_symbols", f.domain().size());
  r.add("alpha_extension_symbols", ax.domain().size());
  bool iso = find_isomorphism(f, ax).has_value();
  r.add("isomorphic", iso);
  return iso ? 0 : 1;
}

int cmd_resolving(const Manifest& m, Report& r, const std::string& name, const std::string& dir) {
  const OneBlockCode& code = m.code(name);
  Direction d = dir == "u" ? Direction::U : Direction::S;
  ResolvingResult res = resolving_check(code, d);
  r.add(dir + "-resolving", res.resolving);
  if (res.witness) {
    r.add("witness.t", point_string(code.domain().symbol_names(), res.witness->first));
    r.add("witness.t_prime", point_string(code.domain().symbol_names(), res.witness->second));
    r.add("witness.image", point_string(code.alphabet(), apply_code(code, res.witness->first)));
  }
  return res.resolving ? 0 : 1;
}

int cmd_degree(const Manifest& m, Report& r, const std::string& name) {
  const OneBlockCode& code = m.code(name);
  MagicData md = verify_d_equals_D(code, m.options.P, k_cap_of(m));
  r.add("degree", "K=" + std::to_string(md.K) + " d=" + std::to_string(md.d) + " D=" + std::to_string(md.D) +
                      " (P=" + std::to_string(md.P) + ")");
  r.add("K", md.K);
  r.add("d", md.d);
  r.add("D", static_cast<std::int64_t>(md.D));
  r.add("P", md.P);
  r.add("radius", md.radius);
  const auto& names = code.domain().symbol_names();
  r.add("magic_word", word_string(names, md.family.seed.items) + " @" + std::to_string(md.family.seed.start));
  r.add("family_size", md.family.members.size());
  r.add("magic_column", static_cast<std::int64_t>(md.family.magic_column()));
  std::vector<std::string> perm;
  for (auto [a, b] : md.permutation.mapping) perm.push_back(names[a] + ">" + names[b]);
  r.add("permutation", joined(perm, " "));
  r.add("permutation_identity", md.permutation.is_identity());
  r.add("minimizing_point", point_string(code.alphabet(), md.minimizing_point));
  return md.d == md.D ? 0 : 1;
}

int cmd_fiber(const Manifest& m, Report& r, const std::string& a, const std::string& b) {
  FiberProduct fp = fiber_product(m.code(a), m.code(b));
  r.blocks.emplace_back(fp.sft);
  r.blocks.emplace_back(fp.proj_a);
  r.blocks.emplace_back(fp.proj_b);
  r.add("symbols", fp.sft->size());
  r.add("edges", fp.sft->edge_count());
  r.add("entropy", max_entropy_component(*fp.sft).best().entropy);
  return 0;
}

int cmd_minlift(const Manifest& m, Report& r, const std::string& a, const std::string& c) {
  const OneBlockCode& alpha = m.code(a);
  MinimalLift ml = minimal_lift(alpha, m.code(c), m.options.L);
  r.blocks.emplace_back(ml.rho1.domain_ptr());
  r.blocks.emplace_back(ml.rho1);
  r.blocks.emplace_back(ml.rho2);
  if (!(ml.beta.domain() == alpha.domain())) r.blocks.emplace_back(ml.beta.domain_ptr());
  r.blocks.emplace_back(ml.beta);
  r.add("fiber_symbols", ml.fiber_symbols);
  r.add("rho1_injective", true);
  r.add("memory", ml.memory);
  r.add("anticipation", ml.anticipation);
  r.add("commutes", ml.commute.commutes);
  r.add("checked_length", ml.commute.max_length);
  r.add("words_checked", ml.commute.words_checked);
  if (ml.commute.witness)
    r.add("witness", word_string(ml.beta.domain().symbol_names(), *ml.commute.witness));
  return ml.commute.commutes ? 0 : 1;
}

int cmd_lift(const Manifest& m, Report& r, const std::string& name) {
  FiberDiagram dg = lift_diagram(m.code(name), m.options.L);
  const DiagramArrow& top = dg.arrow("pitilde");
  r.blocks.emplace_back(top.code.domain_ptr());
  r.blocks.emplace_back(top.code);
  for (const auto& a : dg.arrows) {
    std::string line = a.source + "->" + a.target + " symbols=" + std::to_string(a.code.domain().size());
    for (const auto& [tag, ok] : a.tags) line += " " + tag + "=" + (ok ? "true" : "false");
    r.add("arrow." + a.name, line);
  }
  for (const auto& [sq, c] : dg.commutations)
    r.add("commutes." + sq, std::string(c.commutes ? "true" : "false") + " L=" + std::to_string(c.max_length) +
                                " words=" + std::to_string(c.words_checked));
  for (std::size_t k = 0; k < dg.failures.size(); ++k) r.add("failure." + std::to_string(k), dg.failures[k]);
  r.add("verified", dg.verified());
  return dg.verified() ? 0 : 1;
}

std::vector<OneBlockCode> path_codes(const Manifest& m, const std::string& path, std::size_t at) {
  std::vector<OneBlockCode> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = path.find(',', pos);
    std::string item = path.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (item.empty())
      fail(ErrorKind::InvalidArgument, "empty arrow in diagram at character " + std::to_string(at + pos + 1));
    out.push_back(m.code(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int cmd_commute(const Manifest& m, Report& r, const std::string& diagram) {
  std::size_t eq = diagram.find('=');
  if (eq == std::string::npos || diagram.find('=', eq + 1) != std::string::npos)
    fail(ErrorKind::InvalidArgument, "diagram must read <f1,f2,...>=<g1,g2,...>");
  auto left = path_codes(m, diagram.substr(0, eq), 0);
  auto right = path_codes(m, diagram.substr(eq + 1), eq + 1);
  CommuteResult c = commuting_check(left, right, m.options.L);
  r.add("commutes", c.commutes);
  r.add("checked_length", c.max_length);
  r.add("words_checked", c.words_checked);
  if (c.witness) {
    const OneBlockCode f = compose_path(left), g = compose_path(right);
    const auto& w = *c.witness;
    r.add("witness", word_string(left.front().domain().symbol_names(), w));
    r.add("witness.left", f.letter_name(f.label(w.back())));
    r.add("witness.right", g.letter_name(g.label(w.back())));
  }
  return c.commutes ? 0 : 1;
}

int dispatch(const Manifest& m, Report& r, const std::vector<std::string>& args) {
  if (args.empty()) fail(ErrorKind::InvalidArgument, "no command given");
  const std::string& cmd = args[0];
  CLI::App app{"symdyn " + cmd, cmd};
  app.set_help_flag();
  std::string a, b, opt;
  std::function<int()> run;
  if (cmd == "validate") {
    run = [&] { return cmd_validate(m, r); };
  } else if (cmd == "spectral") {
    app.add_option("system", a)->required();
    run = [&] { return cmd_spectral(m, r, a); };
  } else if (cmd == "cover") {
    app.add_option("code", a)->required();
    opt = "alpha";
    app.add_option("--relation", opt)->check(CLI::IsMember({"alpha", "theta"}));
    run = [&] { return cmd_cover(m, r, a, opt); };
  } else if (cmd == "fischer") {
    app.add_option("code", a)->required();
    run = [&] { return cmd_fischer(m, r, a); };
  } else if (cmd == "resolving") {
    app.add_option("code", a)->required();
    opt = "u";
    app.add_option("--dir", opt)->check(CLI::IsMember({"u", "s"}));
    run = [&] { return cmd_resolving(m, r, a, opt); };
  } else if (cmd == "degree") {
    app.add_option("code", a)->required();
    run = [&] { return cmd_degree(m, r, a); };
  } else if (cmd == "fiber") {
    app.add_option("a", a)->required();
    app.add_option("b", b)->required();
    run = [&] { return cmd_fiber(m, r, a, b); };
  } else if (cmd == "minlift") {
    app.add_option("alpha", a)->required();
    app.add_option("cover", b)->required();
    run = [&] { return cmd_minlift(m, r, a, b); };
  } else if (cmd == "lift") {
    app.add_option("pi", a)->required();
    run = [&] { return cmd_lift(m, r, a); };
  } else if (cmd == "commute") {
    app.add_option("diagram", a)->required();
    run = [&] { return cmd_commute(m, r, a); };
  } else {
    fail(ErrorKind::InvalidArgument, "unknown command '" + cmd + "'");
  }
  std::vector<std::string> rest(args.rbegin(), args.rend() - 1);
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    fail(ErrorKind::InvalidArgument, cmd + ": " + e.what());
  }
  return run();
}

}  // namespace

void Report::put(std::string key, ReportValue value) { summary.emplace_back(std::move(key), std::move(value)); }

std::string Report::text() const {
  std::string out;
  for (const auto& b : blocks) {
    if (auto s = std::get_if<SftPtr>(&b))
      out += print_system(**s);
    else
      out += print_code(std::get<OneBlockCode>(b));
    out += "\n";
  }
  out += "summary\n";
  for (const auto& [k, v] : summary) out += k + ": " + value_text(v) + "\n";
  out += "exit_code: " + std::to_string(exit_code) + "\nend\n";
  return out;
}

std::string Report::json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& b : blocks) {
    if (auto s = std::get_if<SftPtr>(&b)) {
      const OneStepSft& sft = **s;
      const std::string p = "system." + sft.name();
      j[p + ".symbols"] = joined(sft.symbol_names(), " ");
      std::vector<std::string> edges;
      for (auto [x, y] : sft.edges()) edges.push_back(sft.symbol_name(x) + ">" + sft.symbol_name(y));
      std::sort(edges.begin(), edges.end());
      j[p + ".edges"] = joined(edges, " ");
    } else {
      const OneBlockCode& c = std::get<OneBlockCode>(b);
      const std::string p = "code." + c.name();
      j[p + ".system"] = c.domain().name();
      j[p + ".alphabet"] = joined(c.alphabet(), " ");
      std::vector<std::string> map;
      for (SymbolId s = 0; s < c.domain().size(); ++s)
        map.push_back(c.domain().symbol_name(s) + ":" + c.letter_name(c.label(s)));
      j[p + ".map"] = joined(map, " ");
    }
  }
  for (const auto& [k, v] : summary) std::visit([&](const auto& x) { j[k] = x; }, v);
  j["exit_code"] = exit_code;
  return j.dump(2) + "\n";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownName:
    case ErrorKind::InvalidArgument:
    case ErrorKind::AlphabetMismatch:
    case ErrorKind::NotEssential:
    case ErrorKind::EmptyShift:
    case ErrorKind::PartialBlockMap:
      return 2;
    default:
      return 1;
  }
}

Report run_command(const Manifest& manifest, const std::vector<std::string>& args) {
  Report r;
  r.add("version", std::string(version()));
  const std::string opts = print_options(manifest.options);
  r.add("caps", opts.substr(8, opts.size() - 9));
  r.add("command", joined(args, " "));
  try {
    r.exit_code = dispatch(manifest, r, args);
  } catch (const Error& e) {
    r.add("error", std::string(e.what()));
    r.exit_code = exit_code_for(e.kind());
  }
  return r;
}

}  // namespace symdyn

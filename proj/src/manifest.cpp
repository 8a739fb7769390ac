#include "symdyn/manifest.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' && line[j] != '#') ++j;
    out.push_back({std::string(line.substr(i, j - i)), i + 1});
    i = j;
  }
  return out;
}

[[noreturn]] void parse_fail(std::size_t line, std::size_t column, const std::string& msg) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

struct Positioned {
  std::string value;
  std::size_t line, column;
};

struct PendingSystem {
  std::string name;
  std::size_t line;
  std::vector<Positioned> symbols;
  std::vector<std::pair<Positioned, Positioned>> edges;
};

struct PendingCode {
  std::string name;
  std::size_t line;
  SftPtr domain;
  std::vector<std::string> alphabet;
  std::map<std::string, std::string> mapping;
};

std::size_t parse_number(const Token& t, std::string_view value, std::size_t line) {
  std::size_t out = 0;
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || p != value.data() + value.size())
    parse_fail(line, t.column, "expected a non-negative integer in '" + t.text + "'");
  return out;
}

}  // namespace

bool valid_token(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
              std::string_view("_+|(),.*/^[]").find(c) != std::string_view::npos;
    if (!ok) return false;
  }
  return true;
}

const SftPtr& Manifest::system(const std::string& name) const {
  auto it = systems.find(name);
  if (it == systems.end()) fail(ErrorKind::UnknownName, "no system named '" + name + "'");
  return it->second;
}

const OneBlockCode& Manifest::code(const std::string& name) const {
  auto it = codes.find(name);
  if (it == codes.end()) fail(ErrorKind::UnknownName, "no code named '" + name + "'");
  return it->second;
}

bool operator==(const Manifest& a, const Manifest& b) {
  if (!(a.options == b.options) || a.systems.size() != b.systems.size() || a.codes.size() != b.codes.size())
    return false;
  for (const auto& [name, s] : a.systems) {
    auto it = b.systems.find(name);
    if (it == b.systems.end() || !(*s == *it->second) || s->name() != it->second->name()) return false;
  }
  for (const auto& [name, c] : a.codes) {
    auto it = b.codes.find(name);
    if (it == b.codes.end()) return false;
    const OneBlockCode& d = it->second;
    if (c.name() != d.name() || c.domain().name() != d.domain().name() || !(c.domain() == d.domain()) ||
        c.alphabet() != d.alphabet() || c.labels() != d.labels())
      return false;
  }
  return true;
}

Manifest parse_manifest(std::string_view text) {
  Manifest m;
  std::optional<PendingSystem> sys;
  std::optional<PendingCode> code;
  std::set<std::string> names;
  std::size_t line_no = 0;

  auto check_token = [&](const Token& t, const std::string& what) {
    if (!valid_token(t.text)) parse_fail(line_no, t.column, "invalid " + what + " '" + t.text + "'");
  };
  auto claim_name = [&](const Token& t) {
    check_token(t, "name");
    if (!names.insert(t.text).second) parse_fail(line_no, t.column, "duplicate name '" + t.text + "'");
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;

    if (sys) {
      if (head == "symbols") {
        for (std::size_t k = 1; k < toks.size(); ++k) {
          check_token(toks[k], "symbol");
          for (const auto& s : sys->symbols)
            if (s.value == toks[k].text) parse_fail(line_no, toks[k].column, "duplicate symbol '" + toks[k].text + "'");
          sys->symbols.push_back({toks[k].text, line_no, toks[k].column});
        }
      } else if (head == "edges") {
        for (std::size_t k = 1; k < toks.size(); ++k) {
          const std::string& e = toks[k].text;
          std::size_t gt = e.find('>');
          if (gt == std::string::npos || e.find('>', gt + 1) != std::string::npos)
            parse_fail(line_no, toks[k].column, "expected <a>><b>, got '" + e + "'");
          Positioned a{e.substr(0, gt), line_no, toks[k].column};
          Positioned b{e.substr(gt + 1), line_no, toks[k].column + gt + 1};
          for (const auto* p : {&a, &b})
            if (!valid_token(p->value)) parse_fail(line_no, p->column, "invalid symbol '" + p->value + "'");
          sys->edges.emplace_back(std::move(a), std::move(b));
        }
      } else if (head == "end") {
        if (toks.size() > 1) parse_fail(line_no, toks[1].column, "unexpected '" + toks[1].text + "' after end");
        std::set<std::string> declared;
        std::vector<std::string> symbols;
        for (const auto& s : sys->symbols) {
          declared.insert(s.value);
          symbols.push_back(s.value);
        }
        std::set<std::pair<std::string, std::string>> seen;
        std::vector<std::pair<std::string, std::string>> edges;
        for (const auto& [a, b] : sys->edges) {
          for (const auto* p : {&a, &b})
            if (!declared.count(p->value))
              parse_fail(p->line, p->column, "edge references undeclared symbol '" + p->value + "'");
          if (!seen.insert({a.value, b.value}).second)
            parse_fail(a.line, a.column, "duplicate edge " + a.value + ">" + b.value);
          edges.emplace_back(a.value, b.value);
        }
        if (symbols.empty()) parse_fail(sys->line, 1, "system " + sys->name + " declares no symbols");
        m.systems[sys->name] = share(OneStepSft::from_names(sys->name, symbols, edges));
        sys.reset();
      } else {
        parse_fail(line_no, toks[0].column, "unknown directive '" + head + "' inside system " + sys->name);
      }
      continue;
    }

    if (code) {
      if (head == "map") {
        for (std::size_t k = 1; k < toks.size(); ++k) {
          const std::string& e = toks[k].text;
          std::size_t colon = e.find(':');
          if (colon == std::string::npos) parse_fail(line_no, toks[k].column, "expected <sym>:<letter>, got '" + e + "'");
          std::string s = e.substr(0, colon), l = e.substr(colon + 1);
          if (!code->domain->find(s))
            parse_fail(line_no, toks[k].column, "symbol '" + s + "' not in system " + code->domain->name());
          if (std::find(code->alphabet.begin(), code->alphabet.end(), l) == code->alphabet.end())
            parse_fail(line_no, toks[k].column + colon + 1, "letter '" + l + "' not in alphabet of code " + code->name);
          if (!code->mapping.emplace(s, l).second)
            parse_fail(line_no, toks[k].column, "symbol '" + s + "' mapped twice");
        }
      } else if (head == "end") {
        if (toks.size() > 1) parse_fail(line_no, toks[1].column, "unexpected '" + toks[1].text + "' after end");
        for (const auto& s : code->domain->symbol_names())
          if (!code->mapping.count(s)) parse_fail(line_no, 1, "code " + code->name + " has no label for '" + s + "'");
        m.codes.emplace(code->name, OneBlockCode::from_names(code->name, code->domain, code->alphabet, code->mapping));
        code.reset();
      } else {
        parse_fail(line_no, toks[0].column, "unknown directive '" + head + "' inside code " + code->name);
      }
      continue;
    }

    if (head == "system") {
      if (toks.size() != 2) parse_fail(line_no, toks[0].column, "expected: system <name>");
      claim_name(toks[1]);
      sys = PendingSystem{toks[1].text, line_no, {}, {}};
    } else if (head == "code") {
      if (toks.size() < 4 || toks[3].text != "->")
        parse_fail(line_no, toks[0].column, "expected: code <name> <system> -> <letters>");
      claim_name(toks[1]);
      auto it = m.systems.find(toks[2].text);
      if (it == m.systems.end()) parse_fail(line_no, toks[2].column, "unknown system '" + toks[2].text + "'");
      PendingCode pc{toks[1].text, line_no, it->second, {}, {}};
      for (std::size_t k = 4; k < toks.size(); ++k) {
        check_token(toks[k], "letter");
        if (std::find(pc.alphabet.begin(), pc.alphabet.end(), toks[k].text) != pc.alphabet.end())
          parse_fail(line_no, toks[k].column, "duplicate letter '" + toks[k].text + "'");
        pc.alphabet.push_back(toks[k].text);
      }
      if (pc.alphabet.empty()) parse_fail(line_no, toks[0].column, "code " + pc.name + " has an empty alphabet");
      code = std::move(pc);
    } else if (head == "options") {
      for (std::size_t k = 1; k < toks.size(); ++k) {
        const std::string& e = toks[k].text;
        std::size_t eq = e.find('=');
        if (eq == std::string::npos) parse_fail(line_no, toks[k].column, "expected <key>=<value>, got '" + e + "'");
        std::string key = e.substr(0, eq);
        std::string_view value = std::string_view(e).substr(eq + 1);
        std::size_t v = parse_number(toks[k], value, line_no);
        if (key == "P") {
          if (v == 0) parse_fail(line_no, toks[k].column, "P must be positive");
          m.options.P = static_cast<std::uint32_t>(v);
        } else if (key == "L") {
          if (v == 0) parse_fail(line_no, toks[k].column, "L must be positive");
          m.options.L = v;
        } else if (key == "kcap") {
          m.options.k_cap = v;
        } else if (key == "subset_cap") {
          if (v == 0) parse_fail(line_no, toks[k].column, "subset_cap must be positive");
          m.options.subset_cap = v;
        } else {
          parse_fail(line_no, toks[k].column, "unknown option '" + key + "'");
        }
      }
    } else {
      parse_fail(line_no, toks[0].column, "unknown directive '" + head + "'");
    }
  }
  if (sys) parse_fail(line_no, 1, "system " + sys->name + " (line " + std::to_string(sys->line) + ") is missing end");
  if (code) parse_fail(line_no, 1, "code " + code->name + " (line " + std::to_string(code->line) + ") is missing end");
  return m;
}

Manifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::InvalidArgument, "cannot read manifest '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str());
}

std::string print_system(const OneStepSft& sft) {
  std::string out = "system " + sft.name() + "\nsymbols";
  for (const auto& s : sft.symbol_names()) out += " " + s;
  out += "\nedges";
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [a, b] : sft.edges()) edges.emplace_back(sft.symbol_name(a), sft.symbol_name(b));
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) out += " " + a + ">" + b;
  return out + "\nend\n";
}

std::string print_code(const OneBlockCode& code) {
  std::string out = "code " + code.name() + " " + code.domain().name() + " ->";
  for (const auto& l : code.alphabet()) out += " " + l;
  out += "\nmap";
  for (SymbolId s = 0; s < code.domain().size(); ++s)
    out += " " + code.domain().symbol_name(s) + ":" + code.letter_name(code.label(s));
  return out + "\nend\n";
}

std::string print_options(const ManifestOptions& o) {
  return "options P=" + std::to_string(o.P) + " L=" + std::to_string(o.L) + " kcap=" + std::to_string(o.k_cap) +
         " subset_cap=" + std::to_string(o.subset_cap) + "\n";
}

std::string print_manifest(const Manifest& m) {
  std::string out;
  for (const auto& [name, s] : m.systems) out += print_system(*s) + "\n";
  for (const auto& [name, c] : m.codes) out += print_code(c) + "\n";
  return out + print_options(m.options);
}

}  // namespace symdyn

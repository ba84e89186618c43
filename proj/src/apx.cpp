#include "pcaf/apx.hpp"

#include <algorithm>
#include <cctype>

namespace pcaf {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Fact {
  std::string keyword;
  std::vector<std::string> args;
  int line;
};

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::vector<Fact> tokenize(std::string_view text) {
  std::vector<Fact> facts;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    skip_ws();
    while (i < line.size()) {
      Fact fact;
      fact.line = line_no;
      while (i < line.size() && is_name_char(line[i])) fact.keyword += line[i++];
      if (fact.keyword.empty()) fail(line_no, "expected a fact like att(a,b).");
      skip_ws();
      if (i >= line.size() || line[i] != '(') fail(line_no, "expected '(' after " + fact.keyword);
      ++i;
      while (true) {
        skip_ws();
        std::string name;
        while (i < line.size() && is_name_char(line[i])) name += line[i++];
        if (name.empty()) fail(line_no, "expected a name in " + fact.keyword + "(...)");
        fact.args.push_back(std::move(name));
        skip_ws();
        if (i < line.size() && line[i] == ',') {
          ++i;
          continue;
        }
        break;
      }
      if (i >= line.size() || line[i] != ')') fail(line_no, "expected ')' in " + fact.keyword);
      ++i;
      skip_ws();
      if (i >= line.size() || line[i] != '.') fail(line_no, "expected '.' after " + fact.keyword);
      ++i;
      skip_ws();
      facts.push_back(std::move(fact));
    }
  }
  return facts;
}

struct ParsedInput {
  std::vector<std::string> args;
  std::vector<std::string> claims;  // parallel to args
  std::vector<std::pair<std::string, std::string>> attacks;
  std::vector<std::pair<std::string, std::string>> prefs;
};

ParsedInput parse_facts(std::string_view text, bool implicit_claims, bool allow_prefs) {
  ParsedInput out;
  std::unordered_map<std::string, int> arg_index;
  std::unordered_map<std::string, std::pair<std::string, int>> claim_facts;
  std::vector<const Fact*> deferred;
  std::vector<Fact> facts = tokenize(text);
  for (const Fact& f : facts) {
    if (f.keyword == "arg") {
      if (f.args.size() != 1) fail(f.line, "arg takes one name");
      if (!arg_index.emplace(f.args[0], static_cast<int>(out.args.size())).second)
        fail(f.line, "argument declared twice: " + f.args[0]);
      out.args.push_back(f.args[0]);
    } else if (f.keyword == "claim" || f.keyword == "att" || f.keyword == "pref") {
      if (f.args.size() != 2) fail(f.line, f.keyword + " takes two names");
      if (f.keyword == "pref" && !allow_prefs)
        fail(f.line, "pref facts are not allowed here (input must be a plain claim framework)");
      deferred.push_back(&f);
    } else {
      fail(f.line, "unknown fact: " + f.keyword);
    }
  }
  auto require_arg = [&](const std::string& name, int line) {
    if (!arg_index.count(name)) fail(line, "not a declared argument: " + name);
  };
  for (const Fact* f : deferred) {
    if (f->keyword == "claim") {
      require_arg(f->args[0], f->line);
      auto [it, fresh] = claim_facts.emplace(f->args[0], std::make_pair(f->args[1], f->line));
      if (!fresh && it->second.first != f->args[1])
        fail(f->line, "conflicting claim for argument " + f->args[0]);
    } else if (f->keyword == "att") {
      require_arg(f->args[0], f->line);
      require_arg(f->args[1], f->line);
      out.attacks.emplace_back(f->args[0], f->args[1]);
    } else {
      require_arg(f->args[0], f->line);
      require_arg(f->args[1], f->line);
      out.prefs.emplace_back(f->args[0], f->args[1]);
    }
  }
  out.claims.resize(out.args.size());
  for (std::size_t i = 0; i < out.args.size(); ++i) {
    auto it = claim_facts.find(out.args[i]);
    if (it != claim_facts.end()) {
      out.claims[i] = it->second.first;
    } else if (implicit_claims) {
      out.claims[i] = out.args[i];
    } else {
      throw InputError("argument " + out.args[i] +
                       " has no claim fact (use implicit claims to default to the name)");
    }
  }
  return out;
}

void append_name_checked(std::string& out, const std::string& name) {
  if (name.empty()) throw InputError("cannot render an empty name");
  for (char c : name)
    if (!is_name_char(c)) throw InputError("name contains characters outside [A-Za-z0-9_]: " + name);
  out += name;
}

std::string render_caf_part(const ClaimFramework& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    out += "arg(";
    append_name_checked(out, f.af().name_of(i));
    out += ").\n";
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    out += "claim(";
    append_name_checked(out, f.af().name_of(i));
    out += ',';
    append_name_checked(out, f.claim_name(f.claim_of(i)));
    out += ").\n";
  }
  auto attacks = f.af().attack_pairs();
  std::sort(attacks.begin(), attacks.end(), [&](auto x, auto y) {
    return std::make_pair(f.af().name_of(x.first), f.af().name_of(x.second)) <
           std::make_pair(f.af().name_of(y.first), f.af().name_of(y.second));
  });
  for (auto [a, b] : attacks) {
    out += "att(";
    append_name_checked(out, f.af().name_of(a));
    out += ',';
    append_name_checked(out, f.af().name_of(b));
    out += ").\n";
  }
  return out;
}

}  // namespace

PrefFramework parse_pcaf(std::string_view text, bool implicit_claims) {
  ParsedInput in = parse_facts(text, implicit_claims, true);
  ClaimFramework caf(ArgFramework(in.args, in.attacks), in.claims);
  return PrefFramework(std::move(caf), in.prefs);
}

ClaimFramework parse_caf(std::string_view text, bool implicit_claims) {
  ParsedInput in = parse_facts(text, implicit_claims, false);
  return ClaimFramework(ArgFramework(in.args, in.attacks), in.claims);
}

std::string render_apx(const ClaimFramework& f) { return render_caf_part(f); }

std::string render_apx(const PrefFramework& f) {
  std::string out = render_caf_part(f.caf());
  auto prefs = f.pref_pairs();
  const ArgFramework& af = f.caf().af();
  std::sort(prefs.begin(), prefs.end(), [&](auto x, auto y) {
    return std::make_pair(af.name_of(x.first), af.name_of(x.second)) <
           std::make_pair(af.name_of(y.first), af.name_of(y.second));
  });
  for (auto [a, b] : prefs) {
    out += "pref(";
    append_name_checked(out, af.name_of(a));
    out += ',';
    append_name_checked(out, af.name_of(b));
    out += ").\n";
  }
  return out;
}

ClaimSet parse_claim_set(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw InputError("unbalanced '[' in claim set: " + std::string(text));
    body = body.substr(1, body.size() - 2);
  }
  ClaimSet out;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view item = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                             : comma - pos);
    std::size_t first = item.find_first_not_of(" \t");
    if (first == std::string_view::npos)
      throw InputError("empty claim name in claim set: " + std::string(text));
    std::size_t last = item.find_last_not_of(" \t");
    item = item.substr(first, last - first + 1);
    for (char c : item)
      if (!is_name_char(c))
        throw InputError("claim name contains characters outside [A-Za-z0-9_]: " +
                         std::string(item));
    out.insert(std::string(item));
    pos = comma == std::string_view::npos ? body.size() : comma + 1;
    if (comma != std::string_view::npos && pos == body.size())
      throw InputError("trailing comma in claim set: " + std::string(text));
  }
  return out;
}

}  // namespace pcaf

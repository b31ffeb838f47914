#include "pearl/grammar.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pearl {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw GrammarError("grammar line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Grammar Grammar::load(const std::string& text) {
  struct RawRule {
    int line_no;
    std::string lhs;
    std::vector<std::string> rhs;
  };
  std::vector<RawRule> raw;
  std::vector<std::string> pos_names;
  std::string start_name;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = split_ws(strip_comment(line));
    if (toks.empty()) continue;
    if (toks[0] == "%start") {
      if (toks.size() != 2) fail(line_no, "%start takes exactly one tag");
      start_name = toks[1];
      continue;
    }
    if (toks[0] == "%pos") {
      if (toks.size() < 2) fail(line_no, "%pos needs at least one tag");
      pos_names.insert(pos_names.end(), toks.begin() + 1, toks.end());
      continue;
    }
    if (toks.size() < 3 || toks[1] != "->")
      fail(line_no, "expected \"LHS -> RHS...\", got: " + line);
    raw.push_back({line_no, toks[0], {toks.begin() + 2, toks.end()}});
  }
  if (raw.empty()) throw GrammarError("empty grammar: no rules");

  Grammar g;
  // Nonterminals are declared by appearing as a lhs; pos tags by %pos.
  for (const auto& name : pos_names) {
    if (g.tags_.find(name) != kNoTag)
      throw GrammarError("duplicate tag declaration: " + name);
    g.tags_.add(name, TagKind::pos);
  }
  for (const auto& r : raw) {
    TagId t = g.tags_.find(r.lhs);
    if (t == kNoTag) {
      g.tags_.add(r.lhs, TagKind::nonterminal);
    } else if (!g.tags_.is_nonterminal(t)) {
      fail(r.line_no, "rule lhs " + r.lhs + " is declared as a pos tag");
    }
  }

  std::set<std::pair<TagId, std::vector<TagId>>> seen;
  for (const auto& r : raw) {
    Rule rule;
    rule.id = static_cast<RuleId>(g.rules_.size());
    rule.lhs = g.tags_.find(r.lhs);
    for (const auto& name : r.rhs) {
      TagId t = g.tags_.find(name);
      if (t == kNoTag)
        fail(r.line_no, "undeclared tag " + name +
                            " (not a rule lhs and not listed in %pos)");
      rule.rhs.push_back(t);
    }
    if (!seen.insert({rule.lhs, rule.rhs}).second)
      fail(r.line_no, "duplicate rule: " + r.lhs + " -> " +
                          [&] {
                            std::string s;
                            for (const auto& name : r.rhs) {
                              if (!s.empty()) s += ' ';
                              s += name;
                            }
                            return s;
                          }());
    g.by_lhs_[rule.lhs].push_back(rule.id);
    g.by_first_rhs_[rule.rhs.front()].push_back(rule.id);
    g.rules_.push_back(std::move(rule));
  }

  if (start_name.empty()) {
    g.start_ = g.rules_.front().lhs;
  } else {
    g.start_ = g.tags_.find(start_name);
    if (g.start_ == kNoTag)
      throw GrammarError("%start names unknown tag " + start_name);
  }
  if (!g.tags_.is_nonterminal(g.start_) || g.lhs_rule_count(g.start_) == 0)
    throw GrammarError("start symbol " + g.tags_.name(g.start_) +
                       " has no rules");

  TagId top_tag = g.tags_.add(kTopTagName, TagKind::nonterminal);
  g.top_rule_ = Rule{kTopRuleId, top_tag, {g.start_}};
  return g;
}

std::string Grammar::to_text() const {
  std::ostringstream out;
  out << "%start " << tags_.name(start_) << "\n";
  std::vector<std::string> pos;
  for (TagId t : tags_.pos_tags()) pos.push_back(tags_.name(t));
  if (!pos.empty()) {
    out << "%pos";
    for (const auto& p : pos) out << ' ' << p;
    out << "\n";
  }
  for (const auto& r : rules_) {
    out << tags_.name(r.lhs) << " ->";
    for (TagId t : r.rhs) out << ' ' << tags_.name(t);
    out << "\n";
  }
  return out.str();
}

}  // namespace pearl

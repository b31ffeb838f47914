#ifndef PEARL_GRAMMAR_HPP
#define PEARL_GRAMMAR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pearl/tags.hpp"

namespace pearl {

using RuleId = std::int32_t;

// Virtual parent of the start symbol; conditions root predictions but never
// appears in output trees.
inline constexpr RuleId kTopRuleId = -1;
// Marker for lexical (word -> pos) chart entries, which have no CFG rule.
inline constexpr RuleId kLexicalRuleId = -2;

inline constexpr const char* kTopTagName = "*top*";

struct Rule {
  RuleId id = 0;
  TagId lhs = kNoTag;
  std::vector<TagId> rhs;
};

class GrammarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Context-free grammar over a tagset, with the rule indexes the predictor
// and completer need. Immutable after loading; safe to share across parses.
class Grammar {
 public:
  // Grammar file: one rule per line "LHS -> RHS1 RHS2 ...", "#" comments,
  // optional "%start TAG" and "%pos t1 t2 ..." directives. The first rule's
  // lhs is the start symbol unless %start overrides it.
  static Grammar load(const std::string& text);

  std::string to_text() const;

  const TagSet& tags() const { return tags_; }
  const std::vector<Rule>& rules() const { return rules_; }
  TagId start() const { return start_; }
  const Rule& top_rule() const { return top_rule_; }

  // Resolves both real ids and kTopRuleId.
  const Rule& rule(RuleId id) const {
    if (id == kTopRuleId) return top_rule_;
    return rules_.at(static_cast<std::size_t>(id));
  }

  // Earley-type prediction support: every rule whose lhs is `needed`, in id
  // order. Pos tags yield an empty sequence (scanning handles terminals).
  const std::vector<RuleId>& rules_predictable_from(TagId needed) const {
    static const std::vector<RuleId> empty;
    auto it = by_lhs_.find(needed);
    return it == by_lhs_.end() ? empty : it->second;
  }

  const std::vector<RuleId>& rules_with_first_rhs(TagId first) const {
    static const std::vector<RuleId> empty;
    auto it = by_first_rhs_.find(first);
    return it == by_first_rhs_.end() ? empty : it->second;
  }

  // Number of rules sharing a lhs; the smoothing support of the
  // rule-conditional distribution.
  std::int32_t lhs_rule_count(TagId lhs) const {
    auto it = by_lhs_.find(lhs);
    return it == by_lhs_.end() ? 0 : static_cast<std::int32_t>(it->second.size());
  }

 private:
  Grammar() = default;

  TagSet tags_;
  std::vector<Rule> rules_;
  TagId start_ = kNoTag;
  Rule top_rule_;
  std::map<TagId, std::vector<RuleId>> by_lhs_;
  std::map<TagId, std::vector<RuleId>> by_first_rhs_;
};

}  // namespace pearl

#endif

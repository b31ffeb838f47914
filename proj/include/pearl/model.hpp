#ifndef PEARL_MODEL_HPP
#define PEARL_MODEL_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pearl/grammar.hpp"
#include "pearl/lexicon.hpp"

namespace pearl {

struct TrigramKey {
  TagId p0 = kNoTag, p1 = kNoTag, p2 = kNoTag;
  auto operator<=>(const TrigramKey&) const = default;
};

struct SkipKey {
  TagId p0 = kNoTag, p2 = kNoTag;
  auto operator<=>(const SkipKey&) const = default;
};

struct LexKey {
  std::string word;
  TagId tag = kNoTag;
  auto operator<=>(const LexKey&) const = default;
};

struct RuleContextKey {
  RuleId rule = 0;
  TrigramKey context;
  RuleId parent = kTopRuleId;
  auto operator<=>(const RuleContextKey&) const = default;
};

struct ContextKey {
  TrigramKey context;
  RuleId parent = kTopRuleId;
  auto operator<=>(const ContextKey&) const = default;
};

// Add-delta estimate (count + delta) / (total + delta * support); strictly
// positive for delta > 0. `support` is the number of distinct events in the
// distribution.
double smoothed_prob(double count, double total, std::int64_t support,
                     double delta);

// exp(log_sum / n): the geometric mean of n raw scores carried in log domain.
double geometric_mean_score(double log_sum, std::int64_t n);

// All frequency tables the scorer queries. Counts are doubles so that
// unsupervised training can accumulate fractional weights; supervised
// training keeps them integral.
class FrequencyTables {
 public:
  FrequencyTables() = default;
  FrequencyTables(std::int32_t tag_count, std::int32_t rule_count)
      : tag_count_(tag_count), rule_count_(rule_count) {}

  void add_position(TagId p0, TagId p1, TagId p2, std::string_view word,
                    double weight);
  void add_rule_use(RuleId rule, const TrigramKey& context, RuleId parent,
                    double weight);

  double trigram(const TrigramKey& k) const { return get(trigram_, k); }
  double skip(const SkipKey& k) const { return get(skip_, k); }
  double center(TagId t) const { return get(center_, t); }
  double lexical(std::string_view word, TagId t) const {
    return get(lexical_, LexKey{std::string(word), t});
  }
  double tag_total(TagId t) const { return get(tag_total_, t); }
  double rule_in_context(const RuleContextKey& k) const {
    return get(rule_in_context_, k);
  }
  double context_total(const ContextKey& k) const {
    return get(context_total_, k);
  }
  double total_positions() const { return total_positions_; }

  // Distinct words seen with tag t (the unseen slot is not included).
  std::int32_t distinct_words(TagId t) const {
    auto it = distinct_words_.find(t);
    return it == distinct_words_.end() ? 0 : it->second;
  }

  // Count of rule uses whose rule shares `lhs`, in the given context. This is
  // the denominator of the rule-conditional distribution.
  double lhs_context_total(const Grammar& g, TagId lhs,
                           const TrigramKey& context, RuleId parent) const;

  FrequencyTables& operator+=(const FrequencyTables& other);

  bool same_shape(const FrequencyTables& other) const {
    return tag_count_ == other.tag_count_ && rule_count_ == other.rule_count_;
  }
  std::int32_t tag_count() const { return tag_count_; }
  std::int32_t rule_count() const { return rule_count_; }

  const std::map<TrigramKey, double>& trigram_table() const { return trigram_; }
  const std::map<SkipKey, double>& skip_table() const { return skip_; }
  const std::map<TagId, double>& center_table() const { return center_; }
  const std::map<LexKey, double>& lexical_table() const { return lexical_; }
  const std::map<TagId, double>& tag_total_table() const { return tag_total_; }
  const std::map<RuleContextKey, double>& rule_in_context_table() const {
    return rule_in_context_;
  }
  const std::map<ContextKey, double>& context_total_table() const {
    return context_total_;
  }

  void set_total_positions(double v) { total_positions_ = v; }
  void set_raw(const TrigramKey& k, double v) { trigram_[k] = v; }
  void set_raw(const SkipKey& k, double v) { skip_[k] = v; }
  void set_raw_center(TagId t, double v) { center_[t] = v; }
  void set_raw_lexical(const LexKey& k, double v);
  void set_raw_tag_total(TagId t, double v) { tag_total_[t] = v; }
  void set_raw(const RuleContextKey& k, double v) { rule_in_context_[k] = v; }
  void set_raw(const ContextKey& k, double v) { context_total_[k] = v; }

 private:
  template <class M, class K>
  static double get(const M& m, const K& k) {
    auto it = m.find(k);
    return it == m.end() ? 0.0 : it->second;
  }

  std::map<TrigramKey, double> trigram_;
  std::map<SkipKey, double> skip_;
  std::map<TagId, double> center_;
  std::map<LexKey, double> lexical_;
  std::map<TagId, double> tag_total_;
  std::map<RuleContextKey, double> rule_in_context_;
  std::map<ContextKey, double> context_total_;
  std::map<TagId, std::int32_t> distinct_words_;
  double total_positions_ = 0.0;
  std::int32_t tag_count_ = 0;
  std::int32_t rule_count_ = 0;
};

// One part-of-speech trigram hypothesis for the word at the p1 position.
struct TrigramAlternative {
  TagId p0 = kNoTag, p1 = kNoTag, p2 = kNoTag;
  std::string word;
  bool known = true;
  auto operator<=>(const TrigramAlternative&) const = default;
};

// Immutable scoring model: smoothed frequency tables bound to a grammar and
// lexicon. All queries are pure and safe for concurrent use.
class Model {
 public:
  Model(FrequencyTables tables, std::shared_ptr<const Grammar> grammar,
        std::shared_ptr<const Lexicon> lexicon, double delta = 0.5);

  const FrequencyTables& tables() const { return tables_; }
  const Grammar& grammar() const { return *grammar_; }
  const Lexicon& lexicon() const { return *lexicon_; }
  std::shared_ptr<const Grammar> grammar_ptr() const { return grammar_; }
  std::shared_ptr<const Lexicon> lexicon_ptr() const { return lexicon_; }
  double delta() const { return delta_; }
  std::int32_t trigram_tag_count() const { return trigram_tag_count_; }

  // P(p0 p1 p2) / (P(p0 . p2) P(p1)) over smoothed estimates; may exceed 1.
  double trigram_mutual_information(TagId p0, TagId p1, TagId p2) const;
  double log_trigram_mutual_information(TagId p0, TagId p1, TagId p2) const;

  // Known words: P(word | tag) over the tag's seen vocabulary plus one unseen
  // slot. Unknown words: probability of the open-class tag in the corpus.
  double lexical_prob(std::string_view word, TagId tag, bool known) const;

  // log [ MI(p0,p1,p2) * lexical_prob(word, p1) ].
  double log_trigram_score(TagId p0, TagId p1, TagId p2, std::string_view word,
                           bool known) const;
  double log_trigram_score(const TrigramAlternative& alt) const {
    return log_trigram_score(alt.p0, alt.p1, alt.p2, alt.word, alt.known);
  }

  // P(rule | (p0 p1 p2), parent rule), normalized over rules sharing lhs.
  double rule_conditional(const Rule& r, const TrigramKey& context,
                          RuleId parent) const;

  // log max over (trigram, parent) pairs of rule_conditional * trigram score.
  // Both alternative sets must be nonempty.
  double raw_score(const Rule& r,
                   const std::vector<TrigramAlternative>& trigrams,
                   const std::vector<RuleId>& parents) const;

  // Construct a model that swaps the lexicon (used for word withholding).
  Model with_lexicon(std::shared_ptr<const Lexicon> lexicon) const {
    Model m = *this;
    m.lexicon_ = std::move(lexicon);
    return m;
  }

 private:
  FrequencyTables tables_;
  std::shared_ptr<const Grammar> grammar_;
  std::shared_ptr<const Lexicon> lexicon_;
  double delta_ = 0.5;
  std::int32_t trigram_tag_count_ = 0;  // pos tags + boundary
};

}  // namespace pearl

#endif

#include "pearl/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pearl {

double smoothed_prob(double count, double total, std::int64_t support,
                     double delta) {
  if (support <= 0)
    throw std::invalid_argument("smoothed_prob: empty event space");
  if (delta <= 0) throw std::invalid_argument("smoothed_prob: delta must be > 0");
  if (count < 0 || total < 0 || count > total + 1e-9)
    throw std::invalid_argument("smoothed_prob: bad counts");
  return (count + delta) / (total + delta * static_cast<double>(support));
}

double geometric_mean_score(double log_sum, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("geometric_mean_score: n must be >= 1");
  return std::exp(log_sum / static_cast<double>(n));
}

void FrequencyTables::add_position(TagId p0, TagId p1, TagId p2,
                                   std::string_view word, double weight) {
  trigram_[{p0, p1, p2}] += weight;
  skip_[{p0, p2}] += weight;
  center_[p1] += weight;
  LexKey key{Lexicon::fold(word), p1};
  auto [it, fresh] = lexical_.emplace(key, weight);
  if (fresh)
    ++distinct_words_[p1];
  else
    it->second += weight;
  tag_total_[p1] += weight;
  total_positions_ += weight;
}

void FrequencyTables::add_rule_use(RuleId rule, const TrigramKey& context,
                                   RuleId parent, double weight) {
  rule_in_context_[{rule, context, parent}] += weight;
  context_total_[{context, parent}] += weight;
}

void FrequencyTables::set_raw_lexical(const LexKey& k, double v) {
  auto [it, fresh] = lexical_.emplace(k, v);
  if (fresh) {
    ++distinct_words_[k.tag];
  } else if (v != 0) {
    it->second = v;
  }
}

double FrequencyTables::lhs_context_total(const Grammar& g, TagId lhs,
                                          const TrigramKey& context,
                                          RuleId parent) const {
  double total = 0.0;
  for (RuleId id : g.rules_predictable_from(lhs))
    total += rule_in_context(RuleContextKey{id, context, parent});
  return total;
}

FrequencyTables& FrequencyTables::operator+=(const FrequencyTables& other) {
  if (!same_shape(other))
    throw std::invalid_argument("FrequencyTables: mismatched grammars");
  for (const auto& [k, v] : other.trigram_) trigram_[k] += v;
  for (const auto& [k, v] : other.skip_) skip_[k] += v;
  for (const auto& [k, v] : other.center_) center_[k] += v;
  for (const auto& [k, v] : other.lexical_) {
    auto [it, fresh] = lexical_.emplace(k, v);
    if (fresh)
      ++distinct_words_[k.tag];
    else
      it->second += v;
  }
  for (const auto& [k, v] : other.tag_total_) tag_total_[k] += v;
  for (const auto& [k, v] : other.rule_in_context_) rule_in_context_[k] += v;
  for (const auto& [k, v] : other.context_total_) context_total_[k] += v;
  total_positions_ += other.total_positions_;
  return *this;
}

Model::Model(FrequencyTables tables, std::shared_ptr<const Grammar> grammar,
             std::shared_ptr<const Lexicon> lexicon, double delta)
    : tables_(std::move(tables)),
      grammar_(std::move(grammar)),
      lexicon_(std::move(lexicon)),
      delta_(delta) {
  if (delta_ <= 0) throw std::invalid_argument("Model: delta must be > 0");
  trigram_tag_count_ = grammar_->tags().pos_and_boundary_count();
}

double Model::trigram_mutual_information(TagId p0, TagId p1, TagId p2) const {
  return std::exp(log_trigram_mutual_information(p0, p1, p2));
}

double Model::log_trigram_mutual_information(TagId p0, TagId p1,
                                             TagId p2) const {
  const double t = static_cast<double>(trigram_tag_count_);
  const double total = tables_.total_positions();
  const double p_tri = smoothed_prob(tables_.trigram({p0, p1, p2}), total,
                                     static_cast<std::int64_t>(t * t * t), delta_);
  const double p_skip = smoothed_prob(tables_.skip({p0, p2}), total,
                                      static_cast<std::int64_t>(t * t), delta_);
  const double p_center = smoothed_prob(tables_.center(p1), total,
                                        static_cast<std::int64_t>(t), delta_);
  return std::log(p_tri) - std::log(p_skip) - std::log(p_center);
}

double Model::lexical_prob(std::string_view word, TagId tag, bool known) const {
  if (!grammar_->tags().is_pos(tag))
    throw std::invalid_argument("lexical_prob: tag " +
                                grammar_->tags().name(tag) + " is not a pos tag");
  if (known) {
    // Distribution over the words seen with this tag plus one unseen slot.
    const std::int64_t vocab = tables_.distinct_words(tag) + 1;
    return smoothed_prob(tables_.lexical(Lexicon::fold(word), tag),
                         tables_.tag_total(tag), vocab, delta_);
  }
  const auto& open = lexicon_->open_classes();
  if (open.empty())
    throw std::invalid_argument("lexical_prob: no open classes for unknown word");
  return smoothed_prob(tables_.tag_total(tag), tables_.total_positions(),
                       static_cast<std::int64_t>(open.size()), delta_);
}

double Model::log_trigram_score(TagId p0, TagId p1, TagId p2,
                                std::string_view word, bool known) const {
  return log_trigram_mutual_information(p0, p1, p2) +
         std::log(lexical_prob(word, p1, known));
}

double Model::rule_conditional(const Rule& r, const TrigramKey& context,
                               RuleId parent) const {
  const std::int32_t support = grammar_->lhs_rule_count(r.lhs);
  const double count =
      tables_.rule_in_context(RuleContextKey{r.id, context, parent});
  const double total =
      tables_.lhs_context_total(*grammar_, r.lhs, context, parent);
  return smoothed_prob(count, total, support, delta_);
}

double Model::raw_score(const Rule& r,
                        const std::vector<TrigramAlternative>& trigrams,
                        const std::vector<RuleId>& parents) const {
  if (trigrams.empty() || parents.empty())
    throw std::invalid_argument("raw_score: empty alternative set");
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& alt : trigrams) {
    const double tri = log_trigram_score(alt);
    for (RuleId parent : parents) {
      const double v =
          std::log(rule_conditional(r, {alt.p0, alt.p1, alt.p2}, parent)) + tri;
      if (v > best) best = v;
    }
  }
  return best;
}

}  // namespace pearl

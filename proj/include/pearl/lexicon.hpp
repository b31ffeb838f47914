#ifndef PEARL_LEXICON_HPP
#define PEARL_LEXICON_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pearl/tags.hpp"

namespace pearl {

class LexiconError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Word -> pos-tag mappings plus the open-class tag set unknown words may
// assume. Entries are keyed by the case-folded surface form.
class Lexicon {
 public:
  struct Sense {
    TagId tag = kNoTag;
    double count = 0.0;
  };
  struct Hypothesis {
    TagId tag = kNoTag;
    bool known = false;
  };

  // Lexicon file: one line per word "word tag count tag count ...", counts
  // optional (default 0), plus "%open t1 t2 ..." and "#" comments.
  static Lexicon load(const std::string& text, const TagSet& tags);

  std::string to_text(const TagSet& tags) const;

  // Tag hypotheses for a surface word. Known words return their own senses;
  // unknown words return every open-class tag with known=false. An unknown
  // word with no open classes yields an empty sequence.
  std::vector<Hypothesis> pos_hypotheses(std::string_view word) const;

  bool contains(std::string_view word) const;
  void erase(std::string_view word);  // used to withhold words in evaluation

  const std::map<std::string, std::vector<Sense>>& entries() const {
    return entries_;
  }
  const std::vector<TagId>& open_classes() const { return open_classes_; }

  static std::string fold(std::string_view word);

 private:
  std::map<std::string, std::vector<Sense>> entries_;
  std::vector<TagId> open_classes_;  // sorted, unique
};

}  // namespace pearl

#endif

#ifndef PEARL_TAGS_HPP
#define PEARL_TAGS_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pearl {

// Category symbols: grammar nonterminals, part-of-speech tags, and the
// synthetic boundary tag used to pad trigrams at sentence edges.
enum class TagKind { nonterminal, pos, boundary };

using TagId = std::int32_t;
inline constexpr TagId kNoTag = -1;

class TagError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Interned symbol table. The boundary tag is always present at id 0; it never
// appears in rules or the lexicon, only as trigram padding.
class TagSet {
 public:
  TagSet() { add(kBoundaryName, TagKind::boundary); }

  TagId add(const std::string& name, TagKind kind) {
    auto [it, fresh] = by_name_.emplace(name, static_cast<TagId>(names_.size()));
    if (!fresh) throw TagError("duplicate tag name: " + name);
    names_.push_back(name);
    kinds_.push_back(kind);
    return it->second;
  }

  TagId find(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    return it == by_name_.end() ? kNoTag : it->second;
  }

  TagId require(std::string_view name) const {
    TagId t = find(name);
    if (t == kNoTag) throw TagError("unknown tag name: " + std::string(name));
    return t;
  }

  const std::string& name(TagId t) const { return names_.at(t); }
  TagKind kind(TagId t) const { return kinds_.at(t); }
  bool is_pos(TagId t) const { return kind(t) == TagKind::pos; }
  bool is_nonterminal(TagId t) const { return kind(t) == TagKind::nonterminal; }

  TagId boundary() const { return 0; }
  std::int32_t size() const { return static_cast<std::int32_t>(names_.size()); }

  // T in the trigram model: pos tags plus the boundary tag.
  std::int32_t pos_and_boundary_count() const {
    std::int32_t n = 0;
    for (TagKind k : kinds_)
      if (k == TagKind::pos || k == TagKind::boundary) ++n;
    return n;
  }

  std::vector<TagId> pos_tags() const {
    std::vector<TagId> out;
    for (TagId t = 0; t < size(); ++t)
      if (kinds_[t] == TagKind::pos) out.push_back(t);
    return out;
  }

  static constexpr const char* kBoundaryName = "*boundary*";

 private:
  std::vector<std::string> names_;
  std::vector<TagKind> kinds_;
  std::map<std::string, TagId, std::less<>> by_name_;
};

}  // namespace pearl

#endif

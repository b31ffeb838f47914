#include "pearl/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pearl {

namespace {

bool looks_numeric(const std::string& tok) {
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i >= tok.size()) return false;
  return std::isdigit(static_cast<unsigned char>(tok[i])) != 0;
}

[[noreturn]] void fail(int line_no, const std::string& msg) {
  throw LexiconError("lexicon line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

std::string Lexicon::fold(std::string_view word) {
  std::string out(word);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

Lexicon Lexicon::load(const std::string& text, const TagSet& tags) {
  Lexicon lex;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;

    if (toks[0] == "%open") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        TagId t = tags.find(toks[i]);
        if (t == kNoTag || !tags.is_pos(t))
          fail(line_no, "unknown or non-pos open-class tag " + toks[i]);
        lex.open_classes_.push_back(t);
      }
      continue;
    }

    std::string word = fold(toks[0]);
    auto& senses = lex.entries_[word];
    std::size_t i = 1;
    while (i < toks.size()) {
      const std::string& tag_tok = toks[i];
      if (looks_numeric(tag_tok))
        fail(line_no, "expected tag name, got number " + tag_tok);
      TagId t = tags.find(tag_tok);
      if (t == kNoTag || !tags.is_pos(t))
        fail(line_no, "unknown tag name " + tag_tok);
      double count = 0.0;
      ++i;
      if (i < toks.size() && looks_numeric(toks[i])) {
        try {
          std::size_t used = 0;
          count = std::stod(toks[i], &used);
          if (used != toks[i].size()) throw std::invalid_argument(toks[i]);
        } catch (const std::exception&) {
          fail(line_no, "malformed count " + toks[i]);
        }
        if (count < 0) fail(line_no, "negative count " + toks[i]);
        ++i;
      }
      senses.push_back({t, count});
    }
    if (senses.empty()) fail(line_no, "word " + word + " has no tags");
  }
  std::sort(lex.open_classes_.begin(), lex.open_classes_.end());
  lex.open_classes_.erase(
      std::unique(lex.open_classes_.begin(), lex.open_classes_.end()),
      lex.open_classes_.end());
  return lex;
}

std::string Lexicon::to_text(const TagSet& tags) const {
  std::ostringstream out;
  if (!open_classes_.empty()) {
    out << "%open";
    for (TagId t : open_classes_) out << ' ' << tags.name(t);
    out << "\n";
  }
  for (const auto& [word, senses] : entries_) {
    out << word;
    for (const auto& s : senses) {
      out << ' ' << tags.name(s.tag);
      if (s.count != 0) out << ' ' << s.count;
    }
    out << "\n";
  }
  return out.str();
}

std::vector<Lexicon::Hypothesis> Lexicon::pos_hypotheses(
    std::string_view word) const {
  std::vector<Hypothesis> out;
  auto it = entries_.find(fold(word));
  if (it != entries_.end()) {
    for (const auto& s : it->second) out.push_back({s.tag, true});
    return out;
  }
  for (TagId t : open_classes_) out.push_back({t, false});
  return out;
}

bool Lexicon::contains(std::string_view word) const {
  return entries_.count(fold(word)) != 0;
}

void Lexicon::erase(std::string_view word) { entries_.erase(fold(word)); }

}  // namespace pearl

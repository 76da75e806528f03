#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace lexsense {

// Lowercases ASCII and the Latin-1 / Latin Extended-A letters; other bytes
// pass through unchanged.
std::string to_lower_utf8(std::string_view text);

// Closed-class words that never count as content.
class Stoplist {
 public:
  Stoplist() = default;
  explicit Stoplist(std::unordered_set<std::string> words);

  // Built-in French function-word list (same contents as data/stopwords_fr.txt).
  static Stoplist french();
  // One token per line, UTF-8; blank lines ignored; entries are lowercased.
  static Stoplist load(const std::filesystem::path& path);

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  const std::unordered_set<std::string>& words() const { return words_; }

 private:
  std::unordered_set<std::string> words_;
};

struct ContentToken {
  std::string surface;  // lowercased
  bool is_content = false;

  bool operator==(const ContentToken&) const = default;
};

// Splits on whitespace and punctuation (ASCII and common Unicode marks),
// lowercases, and flags stoplisted or too-short tokens as non-content.
class Tokenizer {
 public:
  explicit Tokenizer(Stoplist stoplist = Stoplist::french(), std::size_t min_length = 2);

  std::vector<ContentToken> tokenize(std::string_view text) const;

  // Content tokens only, in text order.
  std::vector<std::string> content_words(std::string_view text) const;

  const Stoplist& stoplist() const { return stoplist_; }

 private:
  bool is_content(std::string_view lowered) const;

  Stoplist stoplist_;
  std::size_t min_length_;
};

}  // namespace lexsense

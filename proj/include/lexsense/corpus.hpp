#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lexsense/pos.hpp"

namespace lexsense {

struct AnnotatedToken {
  std::string surface;
  std::string lemma;
  std::string tag;           // POS column as written
  std::optional<Pos> pos;    // set for content tags only
  std::size_t paragraph_index = 0;
  std::size_t sentence_index = 0;  // within the document
  std::size_t token_index = 0;     // within the document

  bool is_content() const { return pos.has_value(); }
  bool operator==(const AnnotatedToken&) const = default;
};

using Document = std::vector<AnnotatedToken>;

struct NamedDocument {
  std::string id;
  Document tokens;
};

// surface<TAB>lemma<TAB>pos per line; a blank line ends a sentence and a line
// holding only "#PARA" ends a paragraph.
Document parse_corpus(std::istream& in, const std::string& source);
Document read_corpus(const std::filesystem::path& path);

// A single file, or every regular file of a directory in name order. The
// document id is the file stem.
std::vector<NamedDocument> read_corpus_collection(const std::filesystem::path& path);

}  // namespace lexsense

#include "lexsense/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

#include "lexsense/error.hpp"
#include "tsv.hpp"

namespace lexsense {

Document parse_corpus(std::istream& in, const std::string& source) {
  Document doc;
  std::size_t paragraph = 0;
  std::size_t sentence = 0;
  bool sentence_open = false;
  bool paragraph_open = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    detail::strip_cr(line);
    const auto trimmed = detail::trim(line);
    if (trimmed.empty()) {
      if (sentence_open) ++sentence;
      sentence_open = false;
      continue;
    }
    if (trimmed == "#PARA") {
      if (sentence_open) ++sentence;
      if (paragraph_open) ++paragraph;
      sentence_open = paragraph_open = false;
      continue;
    }
    const auto cols = detail::split(line, '\t');
    if (cols.size() != 3) {
      throw ParseError(source, line_no, "expected surface<TAB>lemma<TAB>pos");
    }
    AnnotatedToken tok;
    tok.surface = detail::trim(cols[0]);
    tok.lemma = detail::trim(cols[1]);
    tok.tag = detail::trim(cols[2]);
    if (tok.surface.empty() || tok.lemma.empty() || tok.tag.empty()) {
      throw ParseError(source, line_no, "empty column");
    }
    tok.pos = parse_pos(tok.tag);
    tok.paragraph_index = paragraph;
    tok.sentence_index = sentence;
    tok.token_index = doc.size();
    sentence_open = paragraph_open = true;
    doc.push_back(std::move(tok));
  }
  return doc;
}

Document read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_corpus(in, path.string());
}

std::vector<NamedDocument> read_corpus_collection(const std::filesystem::path& path) {
  std::vector<NamedDocument> docs;
  std::error_code ec;
  if (std::filesystem::is_directory(path, ec)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) docs.push_back({f.stem().string(), read_corpus(f)});
  } else {
    docs.push_back({path.stem().string(), read_corpus(path)});
  }
  return docs;
}

}  // namespace lexsense

#include "lexsense/text.hpp"

#include <fstream>

#include "lexsense/error.hpp"
#include "tsv.hpp"

namespace lexsense {

namespace {

constexpr const char* kFrenchStopwords[] = {
    "a", "ai", "aie", "ait", "as", "au", "aucun", "aucune", "aussi", "autre", "autres",
    "aux", "avaient", "avait", "avant", "avec", "avoir", "ayant", "c", "car", "ce",
    "ceci", "cela", "celle", "celles", "celui", "cependant", "certain", "certaine", "ces",
    "cet", "cette", "ceux", "chaque", "chez", "ci", "comme", "comment", "contre", "d",
    "dans", "de", "des", "donc", "dont", "du", "elle", "elles", "en", "encore", "entre",
    "es", "est", "et", "eu", "eux", "faire", "fait", "font", "fut", "il", "ils", "j",
    "je", "jusqu", "l", "la", "laquelle", "le", "lequel", "les", "lesquels", "leur",
    "leurs", "lui", "m", "ma", "mais", "me", "mes", "moi", "mon", "même", "mêmes", "n",
    "ne", "ni", "nos", "notre", "nous", "on", "ont", "or", "ou", "où", "par", "parce",
    "pas", "peu", "plus", "pour", "pourquoi", "puis", "qu", "quand", "que", "quel",
    "quelle", "quelles", "quels", "qui", "quoi", "s", "sa", "sans", "se", "selon", "ses",
    "si", "soi", "son", "sont", "sous", "sur", "t", "ta", "te", "tes", "toi", "ton",
    "tous", "tout", "toute", "toutes", "très", "tu", "un", "une", "unes", "uns", "vers",
    "vos", "votre", "vous", "y", "à", "ça", "étaient", "était", "été", "être",
};

struct Decoded {
  char32_t cp;
  std::size_t length;
};

// Lenient decoder: an invalid lead or truncated sequence yields the raw byte.
Decoded decode(std::string_view s, std::size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  auto cont = [&](std::size_t k) -> int {
    if (i + k >= s.size()) return -1;
    const auto b = static_cast<unsigned char>(s[i + k]);
    return (b & 0xC0) == 0x80 ? (b & 0x3F) : -1;
  };
  if (b0 < 0x80) return {b0, 1};
  if ((b0 & 0xE0) == 0xC0) {
    const int c1 = cont(1);
    if (c1 >= 0) return {static_cast<char32_t>(((b0 & 0x1F) << 6) | c1), 2};
  } else if ((b0 & 0xF0) == 0xE0) {
    const int c1 = cont(1), c2 = cont(2);
    if (c1 >= 0 && c2 >= 0) {
      return {static_cast<char32_t>(((b0 & 0x0F) << 12) | (c1 << 6) | c2), 3};
    }
  } else if ((b0 & 0xF8) == 0xF0) {
    const int c1 = cont(1), c2 = cont(2), c3 = cont(3);
    if (c1 >= 0 && c2 >= 0 && c3 >= 0) {
      return {static_cast<char32_t>(((b0 & 0x07) << 18) | (c1 << 12) | (c2 << 6) | c3), 4};
    }
  }
  return {b0, 1};
}

void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

char32_t lower(char32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  if (cp == 0x178) return 0xFF;
  // Latin Extended-A alternates upper/lower case in pairs.
  if ((cp >= 0x100 && cp <= 0x137) || (cp >= 0x14A && cp <= 0x177)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E)) {
    return (cp % 2 == 1) ? cp + 1 : cp;
  }
  return cp;
}

bool is_separator(char32_t cp) {
  if (cp < 0x80) {
    return !((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9'));
  }
  switch (cp) {
    case 0x00A0:  // no-break space
    case 0x00A1: case 0x00AB: case 0x00B7: case 0x00BB: case 0x00BF:
    case 0x00D7: case 0x00F7:
    case 0x3000:
      return true;
    default:
      break;
  }
  return cp >= 0x2000 && cp <= 0x206F;  // general punctuation and spaces
}

std::size_t codepoints(std::string_view s) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < s.size(); i += decode(s, i).length) ++n;
  return n;
}

}  // namespace

std::string to_lower_utf8(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const auto d = decode(text, i);
    if (d.cp < 0x80 || d.length > 1) {
      encode(lower(d.cp), out);
    } else {
      out.push_back(text[i]);  // stray byte
    }
    i += d.length;
  }
  return out;
}

Stoplist::Stoplist(std::unordered_set<std::string> words) {
  for (const auto& w : words) words_.insert(to_lower_utf8(w));
}

Stoplist Stoplist::french() {
  Stoplist s;
  for (const char* w : kFrenchStopwords) s.words_.emplace(w);
  return s;
}

Stoplist Stoplist::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  Stoplist s;
  std::string line;
  while (std::getline(in, line)) {
    const auto word = detail::trim(line);
    if (!word.empty()) s.words_.insert(to_lower_utf8(word));
  }
  return s;
}

bool Stoplist::contains(std::string_view word) const {
  return words_.find(std::string(word)) != words_.end();
}

Tokenizer::Tokenizer(Stoplist stoplist, std::size_t min_length)
    : stoplist_(std::move(stoplist)), min_length_(min_length) {}

bool Tokenizer::is_content(std::string_view lowered) const {
  return codepoints(lowered) >= min_length_ && !stoplist_.contains(lowered);
}

std::vector<ContentToken> Tokenizer::tokenize(std::string_view text) const {
  std::vector<ContentToken> out;
  std::string current;
  auto flush = [&] {
    if (current.empty()) return;
    const bool content = is_content(current);
    out.push_back(ContentToken{std::move(current), content});
    current.clear();
  };
  for (std::size_t i = 0; i < text.size();) {
    const auto d = decode(text, i);
    if (is_separator(d.cp)) {
      flush();
    } else if (d.length > 1 || d.cp < 0x80) {
      encode(lower(d.cp), current);
    } else {
      current.push_back(text[i]);
    }
    i += d.length;
  }
  flush();
  return out;
}

std::vector<std::string> Tokenizer::content_words(std::string_view text) const {
  std::vector<std::string> out;
  for (auto& tok : tokenize(text)) {
    if (tok.is_content) out.push_back(std::move(tok.surface));
  }
  return out;
}

}  // namespace lexsense

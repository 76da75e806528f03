#include "lexsense/pos.hpp"

#include "lexsense/error.hpp"

namespace lexsense {

std::string_view to_string(Pos pos) noexcept {
  switch (pos) {
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Adj: return "adj";
    case Pos::Adv: return "adv";
  }
  return "noun";
}

std::optional<Pos> parse_pos(std::string_view tag) noexcept {
  if (tag == "noun") return Pos::Noun;
  if (tag == "verb") return Pos::Verb;
  if (tag == "adj") return Pos::Adj;
  if (tag == "adv") return Pos::Adv;
  return std::nullopt;
}

Pos require_pos(std::string_view tag) {
  if (auto pos = parse_pos(tag)) return *pos;
  throw InvalidArgument("unknown part of speech '" + std::string(tag) +
                        "' (expected noun, verb, adj or adv)");
}

}  // namespace lexsense

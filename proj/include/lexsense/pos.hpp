#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace lexsense {

// Coarse part of speech of a content word.
enum class Pos { Noun, Verb, Adj, Adv };

inline constexpr Pos kAllPos[] = {Pos::Noun, Pos::Verb, Pos::Adj, Pos::Adv};

std::string_view to_string(Pos pos) noexcept;

// Accepts "noun", "verb", "adj", "adv". Anything else is not a content tag.
std::optional<Pos> parse_pos(std::string_view tag) noexcept;

// Same as parse_pos but throws InvalidArgument.
Pos require_pos(std::string_view tag);

}  // namespace lexsense

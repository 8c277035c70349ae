#include "rxmeet/letters.hpp"

#include <cctype>
#include <stdexcept>

namespace rxmeet {

std::optional<LetterId> letter_from_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (std::isalpha(u)) return static_cast<LetterId>(u);
  if (c == '$') return kDollar;
  return std::nullopt;
}

bool letter_is_printable(LetterId id) {
  if (id == kDollar) return true;
  if (id < 0 || id > 127) return false;
  return std::isalpha(static_cast<unsigned char>(id)) != 0;
}

std::string letter_display(LetterId id) {
  if (id == kDollar) return "$";
  if (letter_is_printable(id)) return std::string(1, static_cast<char>(id));
  return "#" + std::to_string(id);
}

std::string word_display(const Word& w) {
  if (w.empty()) return "<epsilon>";
  std::string out;
  for (LetterId id : w) out += letter_display(id);
  return out;
}

Word word_from_text(const std::string& text) {
  if (text == "<epsilon>") return {};
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '#') {
      std::size_t j = i + 1;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
        ++j;
      if (j == i + 1)
        throw std::invalid_argument("'#' must be followed by digits in \"" +
                                    text + "\"");
      out.push_back(static_cast<LetterId>(std::stol(text.substr(i + 1, j - i - 1))));
      i = j;
      continue;
    }
    if (auto id = letter_from_char(c)) {
      out.push_back(*id);
      ++i;
      continue;
    }
    throw std::invalid_argument("bad letter '" + std::string(1, c) +
                                "' in word \"" + text + "\"");
  }
  return out;
}

}  // namespace rxmeet

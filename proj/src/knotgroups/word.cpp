#include "knotchar/knotgroups/word.hpp"

#include <cctype>

#include "knotchar/error.hpp"

namespace knotchar {

Word::Word(const std::vector<Letter>& letters) {
  for (const auto& l : letters) {
    if (l.exponent != 1 && l.exponent != -1) raise(ErrorCode::kInvalidArgument, "letter exponent must be +1 or -1");
    if (!letters_.empty() && letters_.back().generator == l.generator && letters_.back().exponent == -l.exponent) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::power(int generator, int n) {
  std::vector<Letter> out(static_cast<std::size_t>(n < 0 ? -n : n), Letter{generator, n < 0 ? -1 : 1});
  return Word(out);
}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->generator, -it->exponent});
  return w;
}

Word Word::reversed() const {
  return Word(std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

int Word::exponent_sum(int generator) const {
  int s = 0;
  for (const auto& l : letters_) {
    if (l.generator == generator) s += l.exponent;
  }
  return s;
}

Word operator*(const Word& x, const Word& y) {
  std::vector<Letter> all = x.letters_;
  all.insert(all.end(), y.letters_.begin(), y.letters_.end());
  return Word(all);
}

std::string Word::to_string(std::string_view generator_names) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    const char c = generator_names.at(static_cast<std::size_t>(l.generator));
    out += l.exponent > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

Word Word::parse(std::string_view text, std::string_view generator_names) {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ' || c == '1') continue;
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const auto pos = generator_names.find(lower);
    if (pos == std::string_view::npos) {
      raise(ErrorCode::kParseError, "unknown generator '" + std::string(1, c) + "' at position " + std::to_string(i));
    }
    out.push_back({static_cast<int>(pos), c == lower ? 1 : -1});
  }
  return Word(out);
}

}  // namespace knotchar

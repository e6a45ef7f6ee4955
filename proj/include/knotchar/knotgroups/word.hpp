#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace knotchar {

struct Letter {
  int generator = 0;
  int exponent = 1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the generators of a presentation.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);

  /// g^n as a word (n may be negative or zero).
  static Word power(int generator, int n);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  Word inverse() const;
  /// Same letters in reverse order, exponents unchanged.
  Word reversed() const;
  /// Exponent sum of one generator.
  int exponent_sum(int generator) const;

  friend Word operator*(const Word& x, const Word& y);
  friend bool operator==(const Word&, const Word&) = default;

  /// Space-separated letters, uppercase for inverses: "a b A B". Empty word is "1".
  std::string to_string(std::string_view generator_names) const;
  static Word parse(std::string_view text, std::string_view generator_names);

 private:
  std::vector<Letter> letters_;
};

}  // namespace knotchar

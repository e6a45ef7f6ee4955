#include "knotchar/knotgroups/longitude.hpp"

#include "knotchar/charvar/riley.hpp"
#include "knotchar/error.hpp"

namespace knotchar {

namespace {

Word standard_from(const Word& w) {
  const Word wb = w.reversed();
  const Word both = wb * w;
  long e = 0;
  for (const auto& l : both.letters()) e += l.exponent;
  return both * Word::power(0, static_cast<int>(-e));
}

Word map_letters(const Word& w, bool swap, bool negate) {
  std::vector<Letter> out;
  for (const auto& l : w.letters()) out.push_back({swap ? 1 - l.generator : l.generator, negate ? -l.exponent : l.exponent});
  return Word(out);
}

}  // namespace

std::vector<std::pair<std::string, Word>> longitude_candidates(const TwoBridgeSpec& spec) {
  const Word w = two_bridge_w(spec);
  const Word standard = standard_from(w);
  return {{"standard", standard},
          {"inverse", standard.inverse()},
          {"swapped", standard_from(map_letters(w, true, false))},
          {"negated", standard_from(map_letters(w, false, true))}};
}

LongitudeChoice longitude_two_bridge(const TwoBridgeSpec& spec) {
  const RileyModel model = riley_model(spec);
  for (auto& [name, word] : longitude_candidates(spec)) {
    if (verify_longitude(model, word)) return {word, name};
  }
  raise(ErrorCode::kLongitudeCheckFailed, model.presentation.label + ": no longitude candidate passed verification");
}

}  // namespace knotchar

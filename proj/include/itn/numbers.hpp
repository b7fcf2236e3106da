#ifndef ITN_NUMBERS_HPP_
#define ITN_NUMBERS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "itn/lexicon.hpp"
#include "itn/rational.hpp"

namespace itn {

// A maximal numeral-word span starting at `begin`.
struct NumberMatch {
  std::size_t begin = 0;
  std::size_t end = 0;  // half-open
  Rational value;
  NumberClass number_class = NumberClass::kCardinal;
};

// Compositional longest-match parse of Polish numeral words. Scale words
// (tysiac/milion families) multiply the accumulated group; within a group
// magnitudes must strictly decrease (hundreds, then tens or teens, then
// units). The match class follows the final word: ORDINAL when it is an
// ordinal form, COLLECTIVE when collective. "<cardinal> <feminine ordinal>"
// that cannot extend the compound reads as a fraction ("jedna piata" = 1/5).
// Returns nothing when no numeral word starts at `start`; an ill-formed
// continuation ends the match at the longest valid prefix.
std::optional<NumberMatch> parse_number(std::span<const std::string> tokens,
                                        std::size_t start,
                                        const Lexicon& numerals);

inline constexpr std::uint64_t kMaxVerbalizable = 999'999'999;

// Nominative Polish cardinal composition; throws InputError above
// kMaxVerbalizable.
std::vector<std::string> verbalize_number(std::uint64_t value);

// Standard subtractive Roman numeral; throws InputError outside [1, 3999].
std::string to_roman(int value);

}  // namespace itn

#endif  // ITN_NUMBERS_HPP_

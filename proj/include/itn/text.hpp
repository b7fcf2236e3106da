#ifndef ITN_TEXT_HPP_
#define ITN_TEXT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace itn {

// Per-token sentence-terminal label: the token ends a sentence closed by
// the given mark, or kNone when the sentence continues.
enum class BoundaryLabel : std::uint8_t { kNone, kPeriod, kQuestion, kExclam };

// Whether a comma follows the token.
enum class CommaLabel : std::uint8_t { kNone, kComma };

const char* to_string(BoundaryLabel label);
const char* to_string(CommaLabel label);
std::optional<BoundaryLabel> boundary_from_string(std::string_view s);
std::optional<CommaLabel> comma_from_string(std::string_view s);

// '.' / '?' / '!'; kNone has no mark.
char terminal_mark(BoundaryLabel label);

// One surface unit of text. In a normalized stream the surface is lowercase
// and free of sentence punctuation; cased_original keeps the form seen
// before normalization (only present in synthesized data).
struct Token {
  std::string surface;
  std::size_t index = 0;
  std::optional<std::string> cased_original;
};

// Token sequence plus per-token boundary/comma labels; the CRF unit.
struct LabeledSequence {
  std::vector<Token> tokens;
  std::vector<BoundaryLabel> boundaries;
  std::vector<CommaLabel> commas;

  std::size_t size() const { return tokens.size(); }
  bool consistent() const {
    return tokens.size() == boundaries.size() && tokens.size() == commas.size();
  }
};

std::vector<std::string> surfaces(const LabeledSequence& seq);

// Characters that never appear in a normalized surface.
bool is_excluded_punct(char32_t cp);

}  // namespace itn

#endif  // ITN_TEXT_HPP_

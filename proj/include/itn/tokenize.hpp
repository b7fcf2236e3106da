#ifndef ITN_TOKENIZE_HPP_
#define ITN_TOKENIZE_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "itn/text.hpp"

namespace itn {

// Whitespace tokens of punctuated text. Terminal marks (. ? !) and commas
// trailing a word are recorded as events on that word, never as tokens of
// their own; standalone marks attach to the previous surviving token.
// Quotes, parentheses, colons and semicolons at token edges are dropped and
// counted. Word-internal punctuation (abbreviations, decimals) is kept.
struct PunctuatedTokens {
  std::vector<Token> tokens;  // surfaces as written, edge punctuation removed
  std::vector<BoundaryLabel> boundary_events;
  std::vector<CommaLabel> comma_events;
  std::size_t dropped_marks = 0;
};

// Throws InputError (with byte offset) on invalid UTF-8. Empty input gives
// an empty token list.
PunctuatedTokens tokenize(std::string_view text);

// Whitespace split with no punctuation handling, for already-normalized
// streams.
std::vector<std::string> split_whitespace(std::string_view text);

}  // namespace itn

#endif  // ITN_TOKENIZE_HPP_

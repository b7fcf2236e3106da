#ifndef ITN_UTF8_HPP_
#define ITN_UTF8_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace itn::utf8 {

// Decodes one codepoint starting at byte `pos` and advances `pos`.
// Throws InputError naming the byte offset on invalid sequences.
char32_t decode(std::string_view s, std::size_t& pos);

// Whole-string validation; throws InputError with the offending byte offset.
void validate(std::string_view s);

std::size_t length(std::string_view s);  // codepoint count
std::vector<char32_t> decode_all(std::string_view s);
void append(std::string& out, char32_t cp);
std::string encode(const std::vector<char32_t>& cps);

// Case mapping for ASCII, Latin-1 Supplement and Latin Extended-A; this
// covers Polish and Western European letters. Everything else is identity.
char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);
bool is_upper(char32_t cp);
bool is_letter(char32_t cp);

std::string lowercase(std::string_view s);
bool has_uppercase(std::string_view s);

// First/last k codepoints; returns the whole string if shorter.
std::string prefix(std::string_view s, std::size_t k);
std::string suffix(std::string_view s, std::size_t k);

// Uppercases the first codepoint.
std::string capitalize(std::string_view s);

}  // namespace itn::utf8

#endif  // ITN_UTF8_HPP_

#include "itn/utf8.hpp"

#include "itn/error.hpp"

namespace itn::utf8 {

namespace {

[[noreturn]] void bad_byte(std::size_t offset) {
  throw InputError("invalid UTF-8 at byte offset " + std::to_string(offset));
}

}  // namespace

char32_t decode(std::string_view s, std::size_t& pos) {
  const auto at = [&](std::size_t i) -> unsigned char {
    return static_cast<unsigned char>(s[i]);
  };
  const std::size_t start = pos;
  const unsigned char b0 = at(pos);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  int extra;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    bad_byte(start);
  }
  if (pos + static_cast<std::size_t>(extra) >= s.size()) bad_byte(start);
  for (int i = 1; i <= extra; ++i) {
    const unsigned char b = at(pos + i);
    if ((b & 0xC0) != 0x80) bad_byte(start);
    cp = (cp << 6) | (b & 0x3F);
  }
  // Reject overlong encodings and surrogates.
  if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) ||
      (extra == 3 && cp < 0x10000) || cp > 0x10FFFF ||
      (cp >= 0xD800 && cp <= 0xDFFF)) {
    bad_byte(start);
  }
  pos += extra + 1;
  return cp;
}

void validate(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) decode(s, pos);
}

std::size_t length(std::string_view s) {
  std::size_t pos = 0, n = 0;
  while (pos < s.size()) {
    decode(s, pos);
    ++n;
  }
  return n;
}

std::vector<char32_t> decode_all(std::string_view s) {
  std::vector<char32_t> out;
  std::size_t pos = 0;
  while (pos < s.size()) out.push_back(decode(s, pos));
  return out;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(const std::vector<char32_t>& cps) {
  std::string out;
  for (char32_t cp : cps) append(out, cp);
  return out;
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1
  // Latin Extended-A comes in upper/lower pairs.
  if (cp >= 0x100 && cp <= 0x137 && (cp % 2) == 0) return cp + 1;
  if (cp >= 0x139 && cp <= 0x148 && (cp % 2) == 1) return cp + 1;
  if (cp >= 0x14A && cp <= 0x177 && (cp % 2) == 0) return cp + 1;
  if (cp == 0x178) return 0xFF;  // Y with diaeresis
  if (cp >= 0x179 && cp <= 0x17E && (cp % 2) == 1) return cp + 1;
  return cp;
}

char32_t to_upper(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return cp - 0x20;
  if (cp >= 0xE0 && cp <= 0xFE && cp != 0xF7) return cp - 0x20;
  if (cp >= 0x101 && cp <= 0x138 && (cp % 2) == 1) return cp - 1;
  if (cp >= 0x13A && cp <= 0x149 && (cp % 2) == 0) return cp - 1;
  if (cp >= 0x14B && cp <= 0x178 && (cp % 2) == 1) return cp - 1;
  if (cp == 0xFF) return 0x178;
  if (cp >= 0x17A && cp <= 0x17F && (cp % 2) == 0) return cp - 1;
  return cp;
}

bool is_upper(char32_t cp) { return to_lower(cp) != cp; }

bool is_letter(char32_t cp) {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
  if (cp >= 0xC0 && cp <= 0x17F && cp != 0xD7 && cp != 0xF7) return true;
  return false;
}

std::string lowercase(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) append(out, to_lower(decode(s, pos)));
  return out;
}

bool has_uppercase(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (is_upper(decode(s, pos))) return true;
  }
  return false;
}

std::string prefix(std::string_view s, std::size_t k) {
  std::size_t pos = 0, n = 0;
  while (pos < s.size() && n < k) {
    decode(s, pos);
    ++n;
  }
  return std::string(s.substr(0, pos));
}

std::string suffix(std::string_view s, std::size_t k) {
  // Decode once to find the cut position from the end.
  std::vector<std::size_t> starts;
  std::size_t pos = 0;
  while (pos < s.size()) {
    starts.push_back(pos);
    decode(s, pos);
  }
  if (starts.size() <= k) return std::string(s);
  return std::string(s.substr(starts[starts.size() - k]));
}

std::string capitalize(std::string_view s) {
  if (s.empty()) return std::string();
  std::size_t pos = 0;
  const char32_t first = decode(s, pos);
  std::string out;
  append(out, to_upper(first));
  out.append(s.substr(pos));
  return out;
}

}  // namespace itn::utf8

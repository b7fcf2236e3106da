#include "itn/tokenize.hpp"

#include <algorithm>

#include "itn/error.hpp"
#include "itn/utf8.hpp"

namespace itn {

namespace {

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\v' || cp == U'\f' || cp == 0xA0;
}

// Quotes, parentheses, colons, semicolons: dropped at token edges.
bool is_dropped(char32_t cp) {
  switch (cp) {
    case U'"': case U'(': case U')': case U':': case U';':
    case 0x201E: case 0x201C: case 0x201D:  // „ “ ”
    case 0x2018: case 0x2019:               // ‘ ’
    case 0xAB: case 0xBB:                   // « »
      return true;
    default:
      return false;
  }
}

bool is_terminal(char32_t cp) {
  return cp == U'.' || cp == U'?' || cp == U'!' || cp == 0x2026;  // …
}

bool is_comma(char32_t cp) { return cp == U','; }

bool is_mark(char32_t cp) {
  return is_dropped(cp) || is_terminal(cp) || is_comma(cp);
}

BoundaryLabel terminal_label(char32_t cp) {
  switch (cp) {
    case U'?': return BoundaryLabel::kQuestion;
    case U'!': return BoundaryLabel::kExclam;
    default: return BoundaryLabel::kPeriod;  // '.' and '…'
  }
}

bool is_word_char(char32_t cp) {
  return utf8::is_letter(cp) || (cp >= U'0' && cp <= U'9');
}

class Builder {
 public:
  PunctuatedTokens take() && { return std::move(out_); }

  void add_token(std::string surface) {
    Token tok;
    tok.surface = std::move(surface);
    tok.index = out_.tokens.size();
    out_.tokens.push_back(std::move(tok));
    out_.boundary_events.push_back(BoundaryLabel::kNone);
    out_.comma_events.push_back(CommaLabel::kNone);
  }

  // Terminal beats comma; the first terminal seen for a token wins.
  void add_event(char32_t mark) {
    if (out_.tokens.empty()) return;  // orphan mark before any token
    const std::size_t i = out_.tokens.size() - 1;
    if (is_terminal(mark)) {
      if (out_.boundary_events[i] == BoundaryLabel::kNone) {
        out_.boundary_events[i] = terminal_label(mark);
        out_.comma_events[i] = CommaLabel::kNone;
      }
    } else if (is_comma(mark)) {
      if (out_.boundary_events[i] == BoundaryLabel::kNone) {
        out_.comma_events[i] = CommaLabel::kComma;
      }
    }
  }

  void count_dropped(std::size_t n) { out_.dropped_marks += n; }

 private:
  PunctuatedTokens out_;
};

}  // namespace

PunctuatedTokens tokenize(std::string_view text) {
  utf8::validate(text);

  Builder builder;
  const std::vector<char32_t> cps = utf8::decode_all(text);

  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && is_space(cps[i])) ++i;
    std::size_t j = i;
    while (j < cps.size() && !is_space(cps[j])) ++j;
    if (j == i) break;

    // Leading cluster: marks there belong to the previous token.
    std::size_t begin = i;
    while (begin < j && is_mark(cps[begin])) {
      if (is_dropped(cps[begin])) {
        builder.count_dropped(1);
      } else {
        builder.add_event(cps[begin]);
      }
      ++begin;
    }

    std::size_t end = j;
    while (end > begin && is_mark(cps[end - 1])) --end;

    // Keep a trailing period on abbreviations ("m.in.") and one-letter
    // initials ("J."); the rest of the cluster still carries events.
    std::size_t cluster = end;
    if (cluster < j && cps[cluster] == U'.') {
      const bool internal_dot =
          std::find(cps.begin() + begin, cps.begin() + end, U'.') !=
          cps.begin() + end;
      const bool initial = (end - begin == 1) && utf8::is_letter(cps[begin]);
      if (internal_dot || initial) ++cluster;
    }

    if (std::any_of(cps.begin() + begin, cps.begin() + cluster,
                    is_word_char)) {
      std::string surface;
      for (std::size_t k = begin; k < cluster; ++k) {
        utf8::append(surface, cps[k]);
      }
      builder.add_token(std::move(surface));
    } else if (cluster > begin) {
      // Punctuation-only residue such as a standalone dash.
      builder.count_dropped(1);
    }

    for (std::size_t k = cluster; k < j; ++k) {
      if (is_dropped(cps[k])) {
        builder.count_dropped(1);
      } else {
        builder.add_event(cps[k]);
      }
    }
    i = j;
  }
  return std::move(builder).take();
}

std::vector<std::string> split_whitespace(std::string_view text) {
  utf8::validate(text);
  // Multi-byte UTF-8 units are all >= 0x80, so a byte scan is safe here.
  const auto ws = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  };
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && ws(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !ws(text[j])) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace itn

#include "itn/text.hpp"

namespace itn {

const char* to_string(BoundaryLabel label) {
  switch (label) {
    case BoundaryLabel::kNone: return "NONE";
    case BoundaryLabel::kPeriod: return "PERIOD";
    case BoundaryLabel::kQuestion: return "QUESTION";
    case BoundaryLabel::kExclam: return "EXCLAM";
  }
  return "NONE";
}

const char* to_string(CommaLabel label) {
  return label == CommaLabel::kComma ? "COMMA" : "NONE";
}

std::optional<BoundaryLabel> boundary_from_string(std::string_view s) {
  if (s == "NONE") return BoundaryLabel::kNone;
  if (s == "PERIOD") return BoundaryLabel::kPeriod;
  if (s == "QUESTION") return BoundaryLabel::kQuestion;
  if (s == "EXCLAM") return BoundaryLabel::kExclam;
  return std::nullopt;
}

std::optional<CommaLabel> comma_from_string(std::string_view s) {
  if (s == "NONE") return CommaLabel::kNone;
  if (s == "COMMA") return CommaLabel::kComma;
  return std::nullopt;
}

char terminal_mark(BoundaryLabel label) {
  switch (label) {
    case BoundaryLabel::kPeriod: return '.';
    case BoundaryLabel::kQuestion: return '?';
    case BoundaryLabel::kExclam: return '!';
    case BoundaryLabel::kNone: break;
  }
  return '\0';
}

std::vector<std::string> surfaces(const LabeledSequence& seq) {
  std::vector<std::string> out;
  out.reserve(seq.tokens.size());
  for (const Token& t : seq.tokens) out.push_back(t.surface);
  return out;
}

bool is_excluded_punct(char32_t cp) {
  switch (cp) {
    case U'.': case U',': case U'!': case U'?':
    case U':': case U';': case U'"': case U'(': case U')':
      return true;
    default:
      return false;
  }
}

}  // namespace itn

#include "itn/lexicon.hpp"

#include <fstream>

#include "itn/error.hpp"
#include "itn/utf8.hpp"

namespace itn {

namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

std::optional<NumberClass> class_from_string(std::string_view s) {
  if (s == "CARDINAL") return NumberClass::kCardinal;
  if (s == "ORDINAL") return NumberClass::kOrdinal;
  if (s == "COLLECTIVE") return NumberClass::kCollective;
  if (s == "FRACTION") return NumberClass::kFraction;
  if (s == "INDETERMINATE") return NumberClass::kIndeterminate;
  return std::nullopt;
}

bool is_roman_string(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    switch (c) {
      case 'I': case 'V': case 'X': case 'L':
      case 'C': case 'D': case 'M':
        break;
      default:
        return false;
    }
  }
  return true;
}

std::vector<ContextRule> parse_contexts(std::string_view payload,
                                        const std::string& file,
                                        std::size_t line_no) {
  std::vector<ContextRule> rules;
  std::size_t start = 0;
  while (start <= payload.size()) {
    std::size_t comma = payload.find(',', start);
    if (comma == std::string_view::npos) comma = payload.size();
    const std::string_view item = payload.substr(start, comma - start);
    if (!item.empty()) {
      ContextRule rule;
      if (item.rfind("prev=", 0) == 0) {
        rule.side = ContextRule::Side::kPrev;
        rule.token = std::string(item.substr(5));
      } else if (item.rfind("next=", 0) == 0) {
        rule.side = ContextRule::Side::kNext;
        rule.token = std::string(item.substr(5));
      } else {
        throw FormatError(file + ": bad context rule '" + std::string(item) +
                              "'",
                          line_no);
      }
      rules.push_back(std::move(rule));
    }
    start = comma + 1;
  }
  return rules;
}

}  // namespace

const char* to_string(NumberClass c) {
  switch (c) {
    case NumberClass::kCardinal: return "CARDINAL";
    case NumberClass::kOrdinal: return "ORDINAL";
    case NumberClass::kCollective: return "COLLECTIVE";
    case NumberClass::kFraction: return "FRACTION";
    case NumberClass::kIndeterminate: return "INDETERMINATE";
  }
  return "CARDINAL";
}

bool ContextRule::matches(std::string_view neighbour) const {
  if (token == "<num>") {
    if (neighbour.empty()) return false;
    bool all_digits = true;
    for (char c : neighbour) {
      if (c < '0' || c > '9') {
        all_digits = false;
        break;
      }
    }
    return all_digits || is_roman_string(neighbour);
  }
  return neighbour == token;
}

const LexiconEntry* Lexicon::lookup(std::string_view surface) const {
  const auto it = entries_.find(std::string(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

void Lexicon::insert(LexiconEntry entry) {
  const std::string key = entry.surface;
  if (!entries_.emplace(key, std::move(entry)).second) {
    throw FormatError("duplicate surface form '" + key + "'");
  }
  std::size_t tokens = 1;
  for (char c : key) {
    if (c == ' ') ++tokens;
  }
  if (tokens > max_phrase_tokens_) max_phrase_tokens_ = tokens;
}

Lexicon Lexicon::load(const std::filesystem::path& path, LexiconKind kind) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open lexicon file: " + path.string());
  }
  return from_stream(in, kind, path.string());
}

Lexicon Lexicon::from_stream(std::istream& in, LexiconKind kind,
                             const std::string& name) {
  Lexicon lex(kind);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    utf8::validate(line);

    const auto fields = split_tabs(line);
    if (fields.size() < 3) {
      throw FormatError(name + ": expected at least 3 tab-separated fields",
                        line_no);
    }
    LexiconEntry entry;
    entry.surface = std::string(fields[0]);
    entry.canonical = std::string(fields[1]);
    if (entry.surface.empty() || entry.canonical.empty()) {
      throw FormatError(name + ": empty surface or canonical form", line_no);
    }
    if (utf8::has_uppercase(entry.surface)) {
      throw FormatError(name + ": surface form must be lowercase: '" +
                            entry.surface + "'",
                        line_no);
    }
    if (fields[2] == "0") {
      entry.ambiguous = false;
    } else if (fields[2] == "1") {
      entry.ambiguous = true;
    } else {
      throw FormatError(name + ": ambiguous flag must be 0 or 1", line_no);
    }

    if (kind == LexiconKind::kNumeralForm) {
      if (fields.size() != 5) {
        throw FormatError(name + ": numeral entry needs value and class",
                          line_no);
      }
      const auto value = Rational::parse(fields[3]);
      if (!value) {
        throw FormatError(name + ": bad numeral value '" +
                              std::string(fields[3]) + "'",
                          line_no);
      }
      const auto cls = class_from_string(fields[4]);
      if (!cls) {
        throw FormatError(name + ": unknown number class '" +
                              std::string(fields[4]) + "'",
                          line_no);
      }
      entry.value = *value;
      entry.number_class = *cls;
    } else if (kind == LexiconKind::kAbbreviation) {
      if (fields.size() > 4) {
        throw FormatError(name + ": too many fields", line_no);
      }
      if (fields.size() == 4) {
        entry.contexts = parse_contexts(fields[3], name, line_no);
      }
    } else if (fields.size() != 3) {
      throw FormatError(name + ": too many fields", line_no);
    }

    try {
      lex.insert(std::move(entry));
    } catch (const FormatError& e) {
      throw FormatError(name + ": " + e.what(), line_no);
    }
  }
  return lex;
}

}  // namespace itn

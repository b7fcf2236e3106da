#ifndef ITN_LEXICON_HPP_
#define ITN_LEXICON_HPP_

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "itn/rational.hpp"

namespace itn {

enum class LexiconKind { kSurname, kGivenName, kAbbreviation, kNumeralForm };

enum class NumberClass {
  kCardinal,
  kOrdinal,
  kCollective,
  kFraction,
  kIndeterminate,
};

const char* to_string(NumberClass c);

// Context guard on an ambiguous abbreviation entry: the neighbouring token
// must match one of these for the substitution to fire. The token "<num>"
// matches digit strings and Roman numerals.
struct ContextRule {
  enum class Side { kPrev, kNext };
  Side side = Side::kPrev;
  std::string token;

  bool matches(std::string_view neighbour) const;
};

struct LexiconEntry {
  std::string surface;    // lowercase; may contain spaces (phrases)
  std::string canonical;  // cased / abbreviated target form
  bool ambiguous = false;
  // numeral_form payload
  Rational value;
  NumberClass number_class = NumberClass::kCardinal;
  // abbreviation payload
  std::vector<ContextRule> contexts;
};

// Surface-form lookup table loaded from TSV:
//   surface<TAB>canonical<TAB>ambiguous(0|1)[<TAB>payload]
// '#' lines are comments. The numeral_form payload is value<TAB>class;
// the abbreviation payload is a comma list of prev=tok / next=tok guards.
class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(LexiconKind kind) : kind_(kind) {}

  static Lexicon load(const std::filesystem::path& path, LexiconKind kind);
  static Lexicon from_stream(std::istream& in, LexiconKind kind,
                             const std::string& name = "<stream>");

  LexiconKind kind() const { return kind_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const LexiconEntry* lookup(std::string_view surface) const;

  const std::unordered_map<std::string, LexiconEntry>& entries() const {
    return entries_;
  }

  // Longest phrase length over all surfaces, in tokens.
  std::size_t max_phrase_tokens() const { return max_phrase_tokens_; }

  void insert(LexiconEntry entry);  // throws on duplicate surface

 private:
  LexiconKind kind_ = LexiconKind::kSurname;
  std::unordered_map<std::string, LexiconEntry> entries_;
  std::size_t max_phrase_tokens_ = 0;
};

}  // namespace itn

#endif  // ITN_LEXICON_HPP_

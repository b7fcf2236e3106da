#include "itn/numbers.hpp"

#include <array>

#include "itn/error.hpp"
#include "itn/utf8.hpp"

namespace itn {

namespace {

// Magnitude rank inside one scale group: units 1, teens/tens 2, hundreds 3.
// A teen consumes the unit slot too, so it blocks everything after it.
enum Rank { kRankUnit = 1, kRankTens = 2, kRankHundred = 3, kRankScale = 4 };

struct Role {
  int rank = 0;
  bool is_scale = false;          // tysiac / milion families
  std::int64_t scale_value = 0;   // 1000 or 1000000
  bool consumes_unit = false;     // teens
};

std::optional<Role> role_for_value(std::int64_t v) {
  Role role;
  if (v == 1000 || v == 1000000) {
    role.rank = kRankScale;
    role.is_scale = true;
    role.scale_value = v;
    return role;
  }
  if (v >= 1 && v <= 9) {
    role.rank = kRankUnit;
    return role;
  }
  if (v >= 10 && v <= 19) {
    role.rank = kRankTens;
    role.consumes_unit = true;
    return role;
  }
  if (v >= 20 && v <= 90 && v % 10 == 0) {
    role.rank = kRankTens;
    return role;
  }
  if (v >= 100 && v <= 900 && v % 100 == 0) {
    role.rank = kRankHundred;
    return role;
  }
  // Scale-valued ordinals such as "dwutysieczny" (2000th).
  if (v > 0 && v % 1000 == 0 && v <= 999000000) {
    role.rank = kRankScale;
    return role;
  }
  return std::nullopt;
}

// Feminine-looking ordinal surface: nominative "-a", plural "-e",
// locative/genitive "-ej". Drives the fraction-denominator rule and
// time-of-day recognition.
bool feminine_ordinal_surface(const std::string& word) {
  if (word.size() >= 2 && word.compare(word.size() - 2, 2, "ej") == 0) {
    return true;
  }
  if (word.empty()) return false;
  const char back = word.back();
  return back == 'a' || back == 'e';
}

const std::array<const char*, 9> kUnits = {
    "jeden", "dwa", "trzy", "cztery", "pięć",
    "sześć", "siedem", "osiem", "dziewięć"};
const std::array<const char*, 10> kTeens = {
    "dziesięć", "jedenaście", "dwanaście", "trzynaście", "czternaście",
    "piętnaście", "szesnaście", "siedemnaście", "osiemnaście",
    "dziewiętnaście"};
const std::array<const char*, 8> kTens = {
    "dwadzieścia", "trzydzieści", "czterdzieści", "pięćdziesiąt",
    "sześćdziesiąt", "siedemdziesiąt", "osiemdziesiąt",
    "dziewięćdziesiąt"};
const std::array<const char*, 9> kHundreds = {
    "sto", "dwieście", "trzysta", "czterysta", "pięćset",
    "sześćset", "siedemset", "osiemset", "dziewięćset"};

// Polish plural selection: form one for exactly 1, form two when the count
// ends in 2..4 but not 12..14, form three otherwise.
const char* plural_form(std::uint64_t count, const char* one,
                        const char* few, const char* many) {
  if (count == 1) return one;
  const std::uint64_t mod100 = count % 100;
  const std::uint64_t mod10 = count % 10;
  if (mod10 >= 2 && mod10 <= 4 && !(mod100 >= 12 && mod100 <= 14)) return few;
  return many;
}

void verbalize_below_thousand(std::uint64_t value,
                              std::vector<std::string>& out) {
  if (value >= 100) {
    out.emplace_back(kHundreds[value / 100 - 1]);
    value %= 100;
  }
  if (value >= 10 && value <= 19) {
    out.emplace_back(kTeens[value - 10]);
    return;
  }
  if (value >= 20) {
    out.emplace_back(kTens[value / 10 - 2]);
    value %= 10;
  }
  if (value >= 1) out.emplace_back(kUnits[value - 1]);
}

}  // namespace

std::optional<NumberMatch> parse_number(std::span<const std::string> tokens,
                                        std::size_t start,
                                        const Lexicon& numerals) {
  if (start >= tokens.size()) return std::nullopt;

  std::int64_t total = 0;        // completed scale groups
  std::int64_t group = 0;        // current group below the next scale word
  int min_filled_rank = kRankScale + 1;
  int last_scale_rank = 3;       // millions 2, thousands 1; strictly falling
  bool any = false;
  bool terminated = false;       // collectives and "zero" end the match
  NumberClass last_class = NumberClass::kCardinal;
  std::size_t pos = start;

  while (pos < tokens.size() && !terminated) {
    const LexiconEntry* entry = numerals.lookup(tokens[pos]);
    if (entry == nullptr) break;
    const NumberClass cls = entry->number_class;

    if (cls == NumberClass::kIndeterminate) {
      if (any) break;
      NumberMatch match;
      match.begin = start;
      match.end = pos + 1;
      match.value = Rational(0);
      match.number_class = NumberClass::kIndeterminate;
      return match;
    }
    if (cls == NumberClass::kFraction) {  // "pół" and friends
      if (any) break;
      NumberMatch match;
      match.begin = start;
      match.end = pos + 1;
      match.value = entry->value;
      match.number_class = NumberClass::kFraction;
      return match;
    }

    if (!entry->value.is_integer() || entry->value.num < 0) break;
    const std::int64_t v = entry->value.num;

    if (v == 0) {  // "zero": standalone only
      if (any) break;
      any = true;
      last_class = cls;
      terminated = true;
      ++pos;
      continue;
    }

    // Ordinals only continue an ordinal compound ("dwudziesty pierwszy");
    // a cardinal after an ordinal never extends it.
    if (cls == NumberClass::kCardinal && any &&
        last_class == NumberClass::kOrdinal) {
      break;
    }

    if (entry->ambiguous && !any) break;  // never start on an ambiguous form

    if (cls == NumberClass::kCardinal && v >= 1000 && v % 1000 == 0 &&
        (v == 1000 || v == 1000000)) {
      // Scale word: multiply the group accumulated so far.
      const int rank = (v == 1000000) ? 2 : 1;
      if (rank >= last_scale_rank) break;
      total += (group == 0 ? 1 : group) * v;
      group = 0;
      min_filled_rank = kRankScale + 1;
      last_scale_rank = rank;
      any = true;
      last_class = NumberClass::kCardinal;
      ++pos;
      continue;
    }

    const auto role = role_for_value(v);
    if (!role) break;

    const bool extendable = role->rank < min_filled_rank &&
                            !(role->is_scale || role->rank == kRankScale) &&
                            last_scale_rank > 0;
    const bool scale_ordinal = role->rank == kRankScale &&
                               cls == NumberClass::kOrdinal && !any;

    if (cls == NumberClass::kOrdinal && !extendable && !scale_ordinal) {
      // Fraction rule: a completed cardinal followed by a feminine ordinal
      // that cannot join the compound is a denominator.
      if (any && last_class == NumberClass::kCardinal && v >= 2 &&
          feminine_ordinal_surface(tokens[pos])) {
        const std::int64_t numerator = total + group;
        if (numerator >= 1) {
          NumberMatch match;
          match.begin = start;
          match.end = pos + 1;
          match.value = Rational(numerator, v);
          match.number_class = NumberClass::kFraction;
          return match;
        }
      }
      break;
    }
    if (!extendable && !scale_ordinal) break;

    if (scale_ordinal) {
      total += v;
      min_filled_rank = kRankScale;  // tens/teens/units may still follow
      last_scale_rank = 0;           // but no further scale words
    } else {
      group += v;
      min_filled_rank = role->consumes_unit ? kRankUnit : role->rank;
    }
    any = true;
    last_class = cls;
    if (cls == NumberClass::kCollective) terminated = true;
    ++pos;
  }

  if (!any) return std::nullopt;
  NumberMatch match;
  match.begin = start;
  match.end = pos;
  match.value = Rational(total + group);
  match.number_class = last_class;
  return match;
}

std::vector<std::string> verbalize_number(std::uint64_t value) {
  if (value > kMaxVerbalizable) {
    throw InputError("number out of verbalizable range: " +
                     std::to_string(value));
  }
  if (value == 0) return {"zero"};

  std::vector<std::string> out;
  const std::uint64_t millions = value / 1000000;
  const std::uint64_t thousands = (value / 1000) % 1000;
  const std::uint64_t rest = value % 1000;

  if (millions > 0) {
    if (millions > 1) verbalize_below_thousand(millions, out);
    out.emplace_back(plural_form(millions, "milion", "miliony", "milionów"));
  }
  if (thousands > 0) {
    if (thousands > 1) verbalize_below_thousand(thousands, out);
    out.emplace_back(plural_form(thousands, "tysiąc", "tysiące", "tysięcy"));
  }
  verbalize_below_thousand(rest, out);
  return out;
}

std::string to_roman(int value) {
  if (value < 1 || value > 3999) {
    throw InputError("Roman numeral out of range [1, 3999]: " +
                     std::to_string(value));
  }
  static constexpr std::array<std::pair<int, const char*>, 13> kTable = {{
      {1000, "M"}, {900, "CM"}, {500, "D"}, {400, "CD"},
      {100, "C"}, {90, "XC"}, {50, "L"}, {40, "XL"},
      {10, "X"}, {9, "IX"}, {5, "V"}, {4, "IV"}, {1, "I"},
  }};
  std::string out;
  for (const auto& [n, digits] : kTable) {
    while (value >= n) {
      out += digits;
      value -= n;
    }
  }
  return out;
}

}  // namespace itn

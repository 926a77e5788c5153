#include "ontokit/literal.hpp"

#include <array>
#include <cctype>

namespace ontokit {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!is_digit(c)) return false;
  return true;
}

int to_int(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

bool leap_year(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
  static constexpr std::array<int, 12> kDays{31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && leap_year(y)) return 29;
  return kDays[static_cast<std::size_t>(m - 1)];
}

// `dd` at s[pos..pos+1] within [0, limit)
bool two_digits_below(std::string_view s, std::size_t pos, int limit) {
  if (pos + 2 > s.size()) return false;
  auto part = s.substr(pos, 2);
  return all_digits(part) && to_int(part) < limit;
}

bool valid_date(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  auto y = s.substr(0, 4), m = s.substr(5, 2), d = s.substr(8, 2);
  if (!all_digits(y) || !all_digits(m) || !all_digits(d)) return false;
  int month = to_int(m), day = to_int(d);
  if (month < 1 || month > 12) return false;
  return day >= 1 && day <= days_in_month(to_int(y), month);
}

bool valid_time(std::string_view t) {
  // hh:mm[:ss[.f+]][Z|(+|-)hh:mm]
  if (!two_digits_below(t, 0, 24) || t.size() < 5 || t[2] != ':' || !two_digits_below(t, 3, 60))
    return false;
  std::size_t pos = 5;
  if (pos < t.size() && t[pos] == ':') {
    if (!two_digits_below(t, pos + 1, 60)) return false;
    pos += 3;
    if (pos < t.size() && t[pos] == '.') {
      std::size_t start = ++pos;
      while (pos < t.size() && is_digit(t[pos])) ++pos;
      if (pos == start) return false;
    }
  }
  if (pos == t.size()) return true;
  if (t[pos] == 'Z') return pos + 1 == t.size();
  if (t[pos] == '+' || t[pos] == '-') {
    auto off = t.substr(pos + 1);
    return off.size() == 5 && off[2] == ':' && two_digits_below(off, 0, 24) &&
           two_digits_below(off, 3, 60);
  }
  return false;
}

std::optional<std::string> canonical_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  auto dot = s.find('.');
  std::string_view whole = s.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
  if (!all_digits(whole)) return std::nullopt;
  if (dot != std::string_view::npos && !all_digits(frac)) return std::nullopt;

  while (whole.size() > 1 && whole.front() == '0') whole.remove_prefix(1);
  while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);

  std::string out;
  if (negative && !(whole == "0" && frac.empty())) out.push_back('-');
  out.append(whole);
  if (!frac.empty()) {
    out.push_back('.');
    out.append(frac);
  }
  return out;
}

}  // namespace

std::string_view value_type_name(ValueType t) {
  switch (t) {
    case ValueType::String: return "string";
    case ValueType::Number: return "number";
    case ValueType::Boolean: return "boolean";
    case ValueType::DateTime: return "datetime";
    case ValueType::Enumerated: return "enum";
    case ValueType::LiteralAny: return "literal";
  }
  return "?";
}

std::optional<ValueType> parse_value_type(std::string_view keyword) {
  for (auto t : {ValueType::String, ValueType::Number, ValueType::Boolean, ValueType::DateTime,
                 ValueType::Enumerated, ValueType::LiteralAny}) {
    if (value_type_name(t) == keyword) return t;
  }
  return std::nullopt;
}

std::optional<Literal> Literal::string(std::string_view text) {
  if (text.find_first_of("\r\n") != std::string_view::npos) return std::nullopt;
  return Literal(ValueType::String, std::string(text));
}

std::optional<Literal> Literal::number(std::string_view text) {
  auto canon = canonical_decimal(text);
  if (!canon) return std::nullopt;
  return Literal(ValueType::Number, std::string(text), std::move(*canon));
}

Literal Literal::boolean(bool value) { return Literal(ValueType::Boolean, value ? "true" : "false"); }

std::optional<Literal> Literal::boolean(std::string_view text) {
  if (text == "true") return boolean(true);
  if (text == "false") return boolean(false);
  return std::nullopt;
}

std::optional<Literal> Literal::datetime(std::string_view text) {
  if (text.size() < 10 || !valid_date(text.substr(0, 10))) return std::nullopt;
  if (text.size() > 10 && (text[10] != 'T' || !valid_time(text.substr(11)))) return std::nullopt;
  return Literal(ValueType::DateTime, std::string(text));
}

std::optional<Literal> Literal::from_bare_token(std::string_view token) {
  if (auto b = boolean(token)) return b;
  if (auto n = number(token)) return n;
  return datetime(token);
}

std::optional<Literal> Literal::parse_as(ValueType type, std::string_view text) {
  switch (type) {
    case ValueType::String: return string(text);
    case ValueType::Number: return number(text);
    case ValueType::Boolean: return boolean(text);
    case ValueType::DateTime: return datetime(text);
    case ValueType::Enumerated:
    case ValueType::LiteralAny:
      if (auto lit = from_bare_token(text)) return lit;
      return string(text);
  }
  return std::nullopt;
}

bool Literal::conforms_to(ValueType expected) const {
  if (expected == ValueType::Enumerated || expected == ValueType::LiteralAny) return true;
  return type_ == expected;
}

std::string Literal::sort_key() const {
  std::string key(value_type_name(type_));
  key.push_back(':');
  key.append(type_ == ValueType::Number ? numeric_ : lexical_);
  return key;
}

std::string Literal::to_source() const {
  return type_ == ValueType::String ? quote_string(lexical_) : lexical_;
}

bool operator==(const Literal& a, const Literal& b) {
  if (a.type_ != b.type_) return false;
  if (a.type_ == ValueType::Number) return a.numeric_ == b.numeric_;
  return a.lexical_ == b.lexical_;
}

std::string quote_string(std::string_view text) {
  std::string out;
  out.reserve(text.size() + 2);
  out.push_back('"');
  for (char c : text) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace ontokit

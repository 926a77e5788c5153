#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace ontokit {

enum class ValueType { String, Number, Boolean, DateTime, Enumerated, LiteralAny };

std::string_view value_type_name(ValueType t);
std::optional<ValueType> parse_value_type(std::string_view keyword);

/// A typed data value. Construct only through the validating factories.
///
/// Numbers keep their lexical form and an exact canonical decimal string;
/// equality between two numbers is numeric ("1.0" == "1"). Every other
/// pairing compares type and lexical form byte-for-byte.
class Literal {
 public:
  /// Rejects text containing CR or LF (the fixture format is line-based).
  static std::optional<Literal> string(std::string_view text);
  /// `-?[0-9]+(.[0-9]+)?`
  static std::optional<Literal> number(std::string_view text);
  static Literal boolean(bool value);
  static std::optional<Literal> boolean(std::string_view text);
  /// ISO-8601 `YYYY-MM-DD` or `YYYY-MM-DDThh:mm[:ss[.f+]][Z|(+|-)hh:mm]`.
  static std::optional<Literal> datetime(std::string_view text);

  /// Reads a bare (unquoted) token: boolean, number or date-time, in that order.
  static std::optional<Literal> from_bare_token(std::string_view token);
  /// Interprets raw text as `type`; Enumerated and LiteralAny infer the
  /// kind from the text and fall back to String.
  static std::optional<Literal> parse_as(ValueType type, std::string_view text);

  ValueType type() const { return type_; }
  const std::string& lexical() const { return lexical_; }
  /// Canonical decimal form; empty unless type() == Number.
  const std::string& numeric() const { return numeric_; }

  /// Whether this value is acceptable where `expected` is required.
  bool conforms_to(ValueType expected) const;

  /// Total-order key consistent with operator==.
  std::string sort_key() const;

  /// OFT/query surface form: strings quoted and escaped, the rest bare.
  std::string to_source() const;

  friend bool operator==(const Literal& a, const Literal& b);

 private:
  Literal(ValueType type, std::string lexical, std::string numeric = {})
      : type_(type), lexical_(std::move(lexical)), numeric_(std::move(numeric)) {}

  ValueType type_;
  std::string lexical_;
  std::string numeric_;
};

std::string quote_string(std::string_view text);

}  // namespace ontokit

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ontokit {

enum class Severity { Error, Warning };

/// Stable diagnostic codes. These are part of the CLI output contract.
namespace code {
inline constexpr std::string_view Syntax = "E_SYNTAX";
inline constexpr std::string_view Ident = "E_IDENT";
inline constexpr std::string_view UnknownRef = "E_UNKNOWN_REF";
inline constexpr std::string_view KindClash = "E_KIND_CLASH";
inline constexpr std::string_view SelfSubclass = "E_SELF_SUBCLASS";
inline constexpr std::string_view EmptyTypes = "E_EMPTY_TYPES";
inline constexpr std::string_view Facet = "E_FACET";
inline constexpr std::string_view DeclClash = "E_DECL_CLASH";
inline constexpr std::string_view FacetClash = "E_FACET_CLASH";
inline constexpr std::string_view Cycle = "E_CYCLE";
inline constexpr std::string_view TypeMismatch = "E_TYPE_MISMATCH";
inline constexpr std::string_view AllowedValue = "E_ALLOWED_VALUE";
inline constexpr std::string_view CardSingle = "E_CARD_SINGLE";
inline constexpr std::string_view CardMultiple = "E_CARD_MULTIPLE";
inline constexpr std::string_view Domain = "E_DOMAIN";
inline constexpr std::string_view Range = "E_RANGE";
inline constexpr std::string_view UnsupportedMode = "E_UNSUPPORTED_MODE";
inline constexpr std::string_view CsvHeader = "E_CSV_HEADER";
inline constexpr std::string_view DupIndividual = "E_DUP_INDIVIDUAL";
}  // namespace code

/// A machine-readable finding with a source position. `line` is 1-based;
/// `column` is only set for single-line inputs such as query text.
struct Diagnostic {
  Severity severity = Severity::Error;
  std::string code;
  std::string message;
  std::string file;
  int line = 0;
  int column = 0;

  bool is_error() const { return severity == Severity::Error; }
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

Diagnostic make_error(std::string_view code, std::string message, std::string file = {}, int line = 0);
Diagnostic make_warning(std::string_view code, std::string message, std::string file = {}, int line = 0);

std::string_view severity_name(Severity s);

/// `<file>:<line>: <SEV> <CODE> <message>`
std::string format_diagnostic(const Diagnostic& d);

/// Orders by (file, line, code, message).
void sort_diagnostics(std::vector<Diagnostic>& diags);

bool has_errors(const std::vector<Diagnostic>& diags);

/// Thrown by API entry points whose failure is a single caller-facing
/// finding (query syntax, unknown class names).
class DiagnosticError : public std::runtime_error {
 public:
  explicit DiagnosticError(Diagnostic d);
  const Diagnostic& diagnostic() const noexcept { return diag_; }

 private:
  Diagnostic diag_;
};

/// Either a value or the complete list of diagnostics explaining why there
/// is none. Warnings may accompany a value.
template <class T>
class Result {
 public:
  Result(T value, std::vector<Diagnostic> warnings = {})
      : value_(std::move(value)), diagnostics_(std::move(warnings)) {}
  Result(std::vector<Diagnostic> diagnostics) : diagnostics_(std::move(diagnostics)) {}

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!value_) throw std::logic_error("Result has no value");
    return *value_;
  }
  T&& value() && {
    if (!value_) throw std::logic_error("Result has no value");
    return std::move(*value_);
  }
  const T* operator->() const { return &value(); }
  const T& operator*() const { return value(); }

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::optional<T> value_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace ontokit

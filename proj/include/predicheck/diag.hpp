#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>

namespace predicheck {

// Byte range inside a named input. Parsers attach one to every node they
// produce; checkers reuse the span of the declaration they are looking at.
struct SourceSpan {
  std::string file;
  std::size_t start = 0;
  std::size_t end = 0;
};

inline SourceSpan synthetic_span() { return SourceSpan{"<memory>", 0, 0}; }

struct Diag {
  std::string message;
  SourceSpan span = synthetic_span();
  // Machine-readable tag: "parse", "lex", "type", "rule:<name>",
  // "sort-violation", "fuel", "profile:<flag>", ...
  std::string code = "error";
};

inline Diag diag(std::string msg, std::string code = "error",
                 SourceSpan span = synthetic_span()) {
  return Diag{std::move(msg), std::move(span), std::move(code)};
}

// Poor man's expected<T, Diag>; gcc 11 has no std::expected.
template <typename T>
class Result {
public:
  Result(T value) : data_(std::move(value)) {}
  Result(Diag d) : data_(std::move(d)) {}

  bool ok() const { return std::holds_alternative<T>(data_); }
  explicit operator bool() const { return ok(); }

  const T& value() const { return std::get<T>(data_); }
  T& value() { return std::get<T>(data_); }
  T take() { return std::move(std::get<T>(data_)); }

  const Diag& error() const { return std::get<Diag>(data_); }

private:
  std::variant<T, Diag> data_;
};

// For checks that either succeed or explain why not.
using CheckResult = Result<std::monostate>;

inline CheckResult check_ok() { return CheckResult(std::monostate{}); }

} // namespace predicheck

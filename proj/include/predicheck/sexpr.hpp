#pragma once

#include <cctype>
#include <memory>
#include <string>
#include <vector>

#include "predicheck/diag.hpp"

namespace predicheck::sexpr {

// All surface languages share one reader: atoms, double-quoted strings and
// parenthesised lists. Category-specific shape checks happen after reading.
struct SExpr {
  enum class Kind { Atom, String, List } kind = Kind::Atom;
  std::string atom;                // Kind::Atom / Kind::String
  std::vector<SExpr> items;        // Kind::List
  SourceSpan span;

  bool is_atom() const { return kind == Kind::Atom; }
  bool is_atom(const std::string& s) const { return is_atom() && atom == s; }
  bool is_string() const { return kind == Kind::String; }
  bool is_list() const { return kind == Kind::List; }
  std::size_t size() const { return items.size(); }
  const SExpr& operator[](std::size_t i) const { return items[i]; }
  // Head atom of a list, or "" when it has none.
  std::string head() const {
    if (is_list() && !items.empty() && items[0].is_atom()) return items[0].atom;
    return "";
  }
};

namespace detail {

inline bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' ||
         c == '\'' || c == '!' || c == '*' || c == '>' || c == '=' || c == '+' ||
         c == '.';
}

class Reader {
public:
  Reader(std::string_view text, std::string file)
      : text_(text), file_(std::move(file)) {}

  Result<std::vector<SExpr>> read_all() {
    std::vector<SExpr> out;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      auto e = read();
      if (!e.ok()) return e.error();
      out.push_back(e.take());
    }
    return out;
  }

  Result<SExpr> read_one() {
    skip_ws();
    if (pos_ >= text_.size())
      return diag("unexpected end of input", "parse", span(pos_, pos_));
    auto e = read();
    if (!e.ok()) return e;
    std::size_t after = pos_;
    skip_ws();
    if (pos_ < text_.size())
      return diag("trailing input after expression", "parse",
                  span(after, text_.size()));
    return e;
  }

private:
  SourceSpan span(std::size_t a, std::size_t b) const {
    return SourceSpan{file_, a, b};
  }

  void skip_ws() {
    for (;;) {
      while (pos_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[pos_])))
        pos_++;
      if (pos_ < text_.size() && text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') pos_++;
        continue;
      }
      break;
    }
  }

  Result<SExpr> read() {
    char c = text_[pos_];
    if (c == '(') return read_list();
    if (c == ')')
      return diag("unmatched ')'", "parse", span(pos_, pos_ + 1));
    if (c == '"') return read_string();
    return read_atom();
  }

  Result<SExpr> read_list() {
    std::size_t start = pos_;
    pos_++; // '('
    SExpr e;
    e.kind = SExpr::Kind::List;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size())
        return diag("unterminated list", "parse", span(start, text_.size()));
      if (text_[pos_] == ')') {
        pos_++;
        e.span = span(start, pos_);
        return e;
      }
      auto item = read();
      if (!item.ok()) return item;
      e.items.push_back(item.take());
    }
  }

  Result<SExpr> read_string() {
    std::size_t start = pos_;
    pos_++; // '"'
    SExpr e;
    e.kind = SExpr::Kind::String;
    while (pos_ < text_.size() && text_[pos_] != '"') {
      e.atom += text_[pos_];
      pos_++;
    }
    if (pos_ >= text_.size())
      return diag("unterminated string", "lex", span(start, text_.size()));
    pos_++; // closing '"'
    e.span = span(start, pos_);
    return e;
  }

  Result<SExpr> read_atom() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) pos_++;
    if (pos_ == start)
      return diag(std::string("bad character '") + text_[pos_] + "'", "lex",
                  span(start, start + 1));
    SExpr e;
    e.kind = SExpr::Kind::Atom;
    e.atom = std::string(text_.substr(start, pos_ - start));
    e.span = span(start, pos_);
    return e;
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
};

} // namespace detail

inline Result<SExpr> read(std::string_view text, std::string file = "<memory>") {
  return detail::Reader(text, std::move(file)).read_one();
}

inline Result<std::vector<SExpr>> read_all(std::string_view text,
                                           std::string file = "<memory>") {
  return detail::Reader(text, std::move(file)).read_all();
}

inline std::string write(const SExpr& e) {
  switch (e.kind) {
    case SExpr::Kind::Atom: return e.atom;
    case SExpr::Kind::String: return "\"" + e.atom + "\"";
    case SExpr::Kind::List: {
      std::string out = "(";
      for (std::size_t i = 0; i < e.items.size(); i++) {
        if (i) out += ' ';
        out += write(e.items[i]);
      }
      out += ')';
      return out;
    }
  }
  return "";
}

} // namespace predicheck::sexpr

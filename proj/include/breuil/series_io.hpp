#pragma once

// Text form of series.
//
//   series := term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := atom ("^" int)?
//   atom   := int | "w" | var | "(" series ")" | "-" atom
//   var    := "T" int  (or plain "T" when d = 1)
//
// Parenthesised sub-expressions may be raised to powers and are expanded at
// parse time. Output is canonical: graded monomial order, " + " separators,
// unit coefficients omitted, non-prime-field coefficients in parentheses.

#include <cctype>
#include <string>
#include <string_view>

#include "breuil/series.hpp"

namespace breuil {

namespace detail {

class SeriesParser {
 public:
  SeriesParser(std::string_view text, const RingContext& ctx) : text_(text), ctx_(ctx) {}

  TruncatedSeries parse() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty input");
    auto s = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return s;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  TruncatedSeries parse_sum() {
    auto acc = parse_product();
    for (;;) {
      if (accept('+'))
        acc += parse_product();
      else if (accept('-'))
        acc -= parse_product();
      else
        return acc;
    }
  }

  TruncatedSeries parse_product() {
    auto acc = parse_power();
    while (accept('*')) acc *= parse_power();
    return acc;
  }

  TruncatedSeries parse_power() {
    auto base = parse_atom();
    if (accept('^')) {
      skip_ws();
      const auto e = parse_int();
      if (e > 100000) fail("exponent too large");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  unsigned long long parse_int() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
    unsigned long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 1'000'000'000'000ULL) fail("integer too large");
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  TruncatedSeries parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -parse_atom();
    }
    if (c == '(') {
      ++pos_;
      auto inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const auto v = parse_int();
      return TruncatedSeries::constant(ctx_, static_cast<long long>(v % ctx_.k().characteristic()));
    }
    if (c == 'w') {
      if (ctx_.k().degree() == 1) fail("generator 'w' used over a prime field");
      ++pos_;
      return TruncatedSeries::constant(ctx_, ctx_.k().generator());
    }
    if (c == 'T') {
      ++pos_;
      int index = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        const auto v = parse_int();
        if (v == 0 || v > static_cast<unsigned long long>(ctx_.d))
          throw Error(ErrorCode::VariableOutOfRange,
                      "T" + std::to_string(v) + " with d = " + std::to_string(ctx_.d));
        index = static_cast<int>(v);
      } else if (ctx_.d != 1) {
        fail("bare 'T' needs d = 1");
      }
      return TruncatedSeries::variable(ctx_, index - 1);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline TruncatedSeries parse_series(std::string_view text, const RingContext& ctx) {
  return detail::SeriesParser(text, ctx).parse();
}

inline std::string monomial_to_string(const Monomial& m, int d) {
  std::string out;
  for (int i = 0; i < d; ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += d == 1 ? std::string("T") : "T" + std::to_string(i + 1);
    if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
  }
  return out;
}

inline std::string coefficient_to_string(const GroundField& F, FieldElement c) {
  const auto s = F.to_string(c);
  return F.in_prime_field(c) ? s : "(" + s + ")";
}

inline std::string terms_to_string(const TermMap& terms, const RingContext& ctx) {
  if (terms.empty()) return "0";
  const auto& F = ctx.k();
  std::string out;
  for (const auto& [m, c] : terms) {
    if (!out.empty()) out += " + ";
    if (m.degree() == 0) {
      out += coefficient_to_string(F, c);
      continue;
    }
    if (c != F.one()) out += coefficient_to_string(F, c) + "*";
    out += monomial_to_string(m, ctx.d);
  }
  return out;
}

inline std::string to_string(const TruncatedSeries& f) { return terms_to_string(f.terms(), f.ctx()); }
inline std::string to_string(const HomogeneousForm& F) { return terms_to_string(F.coeffs, F.ctx); }

}  // namespace breuil

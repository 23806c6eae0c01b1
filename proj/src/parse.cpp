#include "qmason/parse.hpp"

#include <cctype>

#include "qmason/theorems.hpp"

namespace qmason {

DensePoly to_dense(const PolyValue& v) {
  if (const auto* d = std::get_if<DensePoly>(&v)) return *d;
  return expand(std::get<FactoredPoly>(v));
}

namespace {

struct parse_failure {
  ParseError err;
};

[[noreturn]] void fail(std::size_t pos, std::string message) {
  throw parse_failure{{pos, std::move(message)}};
}

bool value_is_constant(const PolyValue& v) {
  if (const auto* d = std::get_if<DensePoly>(&v)) return d->is_constant();
  return std::get<FactoredPoly>(v).is_constant();
}

GaussianRational constant_of(const PolyValue& v) {
  if (const auto* d = std::get_if<DensePoly>(&v)) return d->coeff(0);
  return std::get<FactoredPoly>(v).lead();
}

PolyValue negate(PolyValue v) {
  if (auto* f = std::get_if<FactoredPoly>(&v)) return -*f;
  return -std::get<DensePoly>(v);
}

// Products keep factored form alive: factored times factored merges the
// multisets, and a constant folds into the leading coefficient.
PolyValue multiply(const PolyValue& a, const PolyValue& b) {
  const auto* fa = std::get_if<FactoredPoly>(&a);
  const auto* fb = std::get_if<FactoredPoly>(&b);
  if (fa && fb) return *fa * *fb;
  if (fa && value_is_constant(b)) {
    const GaussianRational c = constant_of(b);
    if (c.is_zero()) return DensePoly();
    return FactoredPoly(fa->lead() * c, fa->roots());
  }
  if (fb && value_is_constant(a)) {
    const GaussianRational c = constant_of(a);
    if (c.is_zero()) return DensePoly();
    return FactoredPoly(fb->lead() * c, fb->roots());
  }
  return to_dense(a) * to_dense(b);
}

PolyValue power(const PolyValue& v, unsigned e) {
  if (const auto* f = std::get_if<FactoredPoly>(&v)) {
    std::vector<GaussianRational> roots;
    roots.reserve(f->roots().size() * e);
    for (unsigned k = 0; k < e; ++k)
      roots.insert(roots.end(), f->roots().begin(), f->roots().end());
    return FactoredPoly(pow(f->lead(), static_cast<long>(e)), std::move(roots));
  }
  return pow(std::get<DensePoly>(v), e);
}

class Parser {
public:
  Parser(std::string_view text, const QContext& ctx) : text_(text), ctx_(ctx) {}

  PolyValue parse() {
    PolyValue v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail(pos_, "unexpected trailing input");
    return v;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) fail(pos_, std::string("expected '") + c + "' " + what);
  }

  unsigned parse_nat() {
    skip_ws();
    const std::size_t start = pos_;
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (value > 1000000) fail(start, "exponent out of range");
      ++pos_;
    }
    if (pos_ == start) fail(pos_, "expected a natural number");
    return static_cast<unsigned>(value);
  }

  mpz_class parse_int_digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(pos_, "expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  PolyValue expr() {
    PolyValue v = term();
    while (true) {
      if (consume('+'))
        v = to_dense(v) + to_dense(term());
      else if (consume('-'))
        v = to_dense(v) - to_dense(term());
      else
        return v;
    }
  }

  PolyValue term() {
    PolyValue v = unary();
    while (consume('*')) v = multiply(v, unary());
    return v;
  }

  PolyValue unary() {
    if (consume('-')) return negate(unary());
    return factor();
  }

  PolyValue factor() {
    PolyValue v = base();
    if (consume('^')) v = power(v, parse_nat());
    return v;
  }

  PolyValue base() {
    const char c = peek();
    const std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      PolyValue v = expr();
      expect(')', "to close the parenthesis");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return literal();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
      const std::string_view word = text_.substr(pos_, end - pos_);
      if (word == "z") {
        pos_ = end;
        return DensePoly::var();
      }
      if (word == "q") {
        pos_ = end;
        return DensePoly(ctx_.q());
      }
      if (word == "i") {
        pos_ = end;
        return DensePoly(GaussianRational::i());
      }
      if (word == "qb" || word == "qf") {
        pos_ = end;
        expect('(', "after builtin name");
        const std::size_t arg_pos = pos_;
        PolyValue arg = expr();
        expect(';', "between builtin arguments");
        const unsigned n = parse_nat();
        expect(')', "to close the builtin call");
        if (word == "qb") {
          if (!value_is_constant(arg))
            fail(arg_pos, "qb: first argument must be constant after q-substitution");
          return q_pow_factor(constant_of(arg), n, ctx_);
        }
        if (const auto* f = std::get_if<FactoredPoly>(&arg))
          return q_fermat_power(*f, n, ctx_);
        return q_fermat_power(std::get<DensePoly>(arg), n, ctx_);
      }
      fail(start, "unknown symbol '" + std::string(word) + "'");
    }
    fail(pos_, "expected a polynomial factor");
  }

  // nat ('/' nat)? 'i'?   (a trailing 'i' makes the value imaginary)
  PolyValue literal() {
    const std::size_t start = pos_;
    const mpz_class num = parse_int_digits();
    mpz_class den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = parse_int_digits();
      if (den == 0) fail(start, "zero denominator");
    }
    Rational r(num, den);
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return DensePoly(GaussianRational(Rational(0), r));
    }
    return DensePoly(GaussianRational(r));
  }

  std::string_view text_;
  const QContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseResult parse_poly(std::string_view text, const QContext& ctx) {
  try {
    return Parser(text, ctx).parse();
  } catch (const parse_failure& f) {
    return f.err;
  }
}

}  // namespace qmason

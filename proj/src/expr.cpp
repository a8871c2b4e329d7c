#include "rhg/expr.hpp"

#include <cctype>
#include <optional>

#include "rhg/error.hpp"

namespace rhg {

Field parse_field(std::string_view tag) {
  if (tag == "Q") return Field::rationals();
  if (tag.size() >= 2 && tag[0] == 'F') {
    std::string digits(tag.substr(1));
    bool ok = digits[0] != '0';
    for (char c : digits) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    if (ok) {
      mpz_class p(digits);
      if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
        throw PreconditionError("field " + std::string(tag) + ": " + digits + " is not prime");
      }
      if (p >= mpz_class("9223372036854775808")) {
        throw UnsupportedField("field " + std::string(tag) + ": p must be below 2^63");
      }
      return Field::prime(std::stoull(digits));
    }
  }
  throw PreconditionError("unknown field '" + std::string(tag) + "' (expected Q or F<p>)");
}

namespace {

// N/D over the target field, plus the exact rational value when the
// subexpression is built from literals alone.
struct Value {
  Poly num;
  Poly den;
  std::optional<mpq_class> exact;
};

class Parser {
 public:
  Parser(std::string_view text, std::string_view var, const Field& field)
      : text_(text), var_(var), k_(field) {}

  Value parse() {
    Value v = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Value constant(const mpq_class& q) const {
    return {Poly::constant(k_, k_.from_rational(q)), Poly::constant(k_, k_.one()), q};
  }

  Value expr() {
    Value v = term();
    for (;;) {
      if (eat('+')) {
        v = add(v, term(), false);
      } else if (eat('-')) {
        v = add(v, term(), true);
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = unary();
    for (;;) {
      if (eat('*')) {
        Value r = unary();
        v = {v.num * r.num, v.den * r.den, product(v.exact, r.exact)};
      } else if (eat('/')) {
        std::size_t at = pos_;
        Value r = unary();
        v = divide(v, r, at);
      } else {
        return v;
      }
    }
  }

  Value unary() {
    if (eat('-')) {
      Value v = unary();
      return {-v.num, v.den, v.exact ? std::optional<mpq_class>(-*v.exact) : std::nullopt};
    }
    if (eat('+')) return unary();
    return power();
  }

  Value power() {
    Value base = primary();
    if (!eat('^')) return base;
    std::size_t at = pos_;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent");
    Value e = power();  // right-associative
    if (!e.exact || e.exact->get_den() != 1) {
      pos_ = at;
      fail("exponent must be an integer constant");
    }
    const mpz_class n = e.exact->get_num();
    if (n < 0 || n > kMaxExponent) {
      pos_ = at;
      fail("exponent " + n.get_str() + " outside [0, " + std::to_string(kMaxExponent) + "]");
    }
    const auto u = static_cast<unsigned>(n.get_ui());
    std::optional<mpq_class> exact;
    if (base.exact) {
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), base.exact->get_num_mpz_t(), u);
      mpz_pow_ui(den.get_mpz_t(), base.exact->get_den_mpz_t(), u);
      exact = mpq_class(num, den);
    }
    return {pow(base.num, u), pow(base.den, u), exact};
  }

  Value primary() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      if (name != var_) {
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "' (the variable is " + std::string(var_) + ")");
      }
      return {Poly::variable(k_), Poly::constant(k_, k_.one()), std::nullopt};
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static std::optional<mpq_class> product(const std::optional<mpq_class>& a,
                                          const std::optional<mpq_class>& b) {
    if (a && b) return *a * *b;
    return std::nullopt;
  }

  Value add(const Value& a, const Value& b, bool minus) const {
    Poly rhs = b.num * a.den;
    std::optional<mpq_class> exact;
    if (a.exact && b.exact) exact = minus ? mpq_class(*a.exact - *b.exact) : mpq_class(*a.exact + *b.exact);
    Poly num = minus ? a.num * b.den - rhs : a.num * b.den + rhs;
    return reduce({std::move(num), a.den * b.den, exact});
  }

  Value divide(const Value& a, const Value& b, std::size_t at) const {
    if (b.num.is_zero()) {
      const std::string where = " at position " + std::to_string(at + 1);
      if (b.exact && *b.exact != 0) {
        if (a.exact) {
          mpq_class q = *a.exact / *b.exact;
          throw ArithmeticError("coefficient " + q.get_str() + " is undefined in " + k_.name() + where);
        }
        throw ArithmeticError("division by " + b.exact->get_str() + ", which is 0 in " + k_.name() + where);
      }
      throw ArithmeticError("division by the zero polynomial" + where);
    }
    std::optional<mpq_class> exact;
    if (a.exact && b.exact) exact = *a.exact / *b.exact;
    return reduce({a.num * b.den, a.den * b.num, exact});
  }

  // Keeps intermediate degrees down; the final map is normalised anyway.
  static Value reduce(Value v) {
    if (v.num.is_zero()) return {v.num, Poly::constant(v.den.field(), v.den.field().one()), v.exact};
    Poly g = gcd(v.num, v.den);
    if (g.degree() > 0) {
      v.num = exact_div(v.num, g);
      v.den = exact_div(v.den, g);
    }
    return v;
  }

  std::string_view text_;
  std::string_view var_;
  Field k_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalMap parse_rational_expr(std::string_view text, std::string_view var, const Field& field) {
  Value v = Parser(text, var, field).parse();
  if (v.num.is_zero()) throw PreconditionError("expression '" + std::string(text) + "' is the constant 0");
  Poly g = gcd(v.num, v.den);
  if (exact_div(v.num, g).is_constant() && exact_div(v.den, g).is_constant()) {
    throw PreconditionError("expression '" + std::string(text) + "' is constant");
  }
  return make_map(std::move(v.num), std::move(v.den));
}

}  // namespace rhg

#include "harmonic2v/cli/expression.hpp"

#include <cctype>

#include "harmonic2v/errors.hpp"

namespace harmonic2v::cli {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int m) : text_(text), m_(m) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) throw SyntaxError("empty expression", pos_);
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return p;
  }

 private:
  Polynomial constant(const GaussianRational& c) const {
    return Polynomial::monomial(Monomial(m_), c);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected an integer", start);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial expr() {
    Polynomial acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  Polynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Polynomial power_of(const Polynomial& base) {
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    mpz_class e = integer();
    if (e > 4096) throw SyntaxError("exponent too large", at);
    return harmonic2v::power(base, static_cast<int>(e.get_si()));
  }

  Polynomial power() { return power_of(atom()); }

  Polynomial atom() {
    skip_space();
    if (pos_ == text_.size()) throw SyntaxError("unexpected end of expression", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(integer());
      if (accept('/')) {
        const std::size_t at = pos_;
        mpz_class den = integer();
        if (den == 0) throw SyntaxError("division by zero", at);
        value /= mpq_class(den);
      }
      return constant(GaussianRational(value));
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    if (c == 'i') {
      ++pos_;
      return constant(GaussianRational::i());
    }
    if (c == 'x' || c == 'u') {
      const std::size_t at = pos_;
      ++pos_;
      if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw SyntaxError("expected a variable index", pos_);
      }
      mpz_class index = integer();
      if (index < 1 || index > m_) {
        throw VariableOutOfRange("variable " + std::string(1, c) + index.get_str() +
                                 " at position " + std::to_string(at) + " exceeds m=" +
                                 std::to_string(m_));
      }
      Monomial mono(m_);
      const int idx = static_cast<int>(index.get_si());
      mono.set(c == 'x' ? Variable::x(idx) : Variable::u(idx), 1);
      return Polynomial::monomial(mono);
    }
    throw SyntaxError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  std::string_view text_;
  int m_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, int m) {
  // Validates the dimension range before parsing.
  (void)Polynomial::low_dimensional(m);
  return Parser(text, m).parse();
}

std::string print_poly(const Polynomial& p) { return p.to_string(); }

}  // namespace harmonic2v::cli

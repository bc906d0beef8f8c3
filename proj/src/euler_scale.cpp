#include "harmonic2v/euler_scale.hpp"

#include "harmonic2v/errors.hpp"
#include "harmonic2v/rational_util.hpp"

namespace harmonic2v {

EulerPolynomial::EulerPolynomial(const mpq_class& c) {
  if (sgn(c) != 0) coeffs_.emplace(std::pair{0, 0}, c);
}

EulerPolynomial EulerPolynomial::ex() {
  EulerPolynomial p;
  p.coeffs_.emplace(std::pair{1, 0}, mpq_class(1));
  return p;
}

EulerPolynomial EulerPolynomial::eu() {
  EulerPolynomial p;
  p.coeffs_.emplace(std::pair{0, 1}, mpq_class(1));
  return p;
}

EulerPolynomial EulerPolynomial::hx(int m) {
  return EulerPolynomial(-1) * (ex() + EulerPolynomial(half(m)));
}

EulerPolynomial EulerPolynomial::hu(int m) {
  return EulerPolynomial(-1) * (eu() + EulerPolynomial(half(m)));
}

bool EulerPolynomial::is_constant() const noexcept {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == std::pair{0, 0});
}

mpq_class EulerPolynomial::evaluate(const Bidegree& at) const {
  mpq_class total = 0;
  for (const auto& [powers, c] : coeffs_) {
    mpz_class px, pu;
    mpz_class kx = at.k;
    mpz_class ku = at.l;
    mpz_pow_ui(px.get_mpz_t(), kx.get_mpz_t(), static_cast<unsigned long>(powers.first));
    mpz_pow_ui(pu.get_mpz_t(), ku.get_mpz_t(), static_cast<unsigned long>(powers.second));
    total += c * mpq_class(px * pu);
  }
  return total;
}

EulerPolynomial EulerPolynomial::shifted(int dx, int du) const {
  if (dx == 0 && du == 0) return *this;
  const EulerPolynomial sx = ex() + EulerPolynomial(static_cast<long>(dx));
  const EulerPolynomial su = eu() + EulerPolynomial(static_cast<long>(du));
  EulerPolynomial out;
  for (const auto& [powers, c] : coeffs_) {
    EulerPolynomial term(c);
    for (int t = 0; t < powers.first; ++t) term *= sx;
    for (int t = 0; t < powers.second; ++t) term *= su;
    out += term;
  }
  return out;
}

EulerPolynomial& EulerPolynomial::operator+=(const EulerPolynomial& o) {
  for (const auto& [powers, c] : o.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(powers, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) coeffs_.erase(it);
    }
  }
  return *this;
}

EulerPolynomial& EulerPolynomial::operator*=(const EulerPolynomial& o) {
  EulerPolynomial out;
  for (const auto& [pa, ca] : coeffs_) {
    for (const auto& [pb, cb] : o.coeffs_) {
      EulerPolynomial t;
      t.coeffs_.emplace(std::pair{pa.first + pb.first, pa.second + pb.second}, ca * cb);
      out += t;
    }
  }
  *this = std::move(out);
  return *this;
}

std::string EulerPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [powers, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += c.get_str();
    if (powers.first > 0) out += "*Ex^" + std::to_string(powers.first);
    if (powers.second > 0) out += "*Eu^" + std::to_string(powers.second);
  }
  return out;
}

EulerRationalScale::EulerRationalScale(EulerPolynomial num, EulerPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw InvalidArgument("Euler-rational scale with zero denominator");
}

mpq_class EulerRationalScale::evaluate(const Bidegree& at) const {
  mpq_class d = den_.evaluate(at);
  if (sgn(d) == 0) throw ZeroDenominator(at.k, at.l);
  return num_.evaluate(at) / d;
}

EulerRationalScale operator+(const EulerRationalScale& a, const EulerRationalScale& b) {
  if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

std::string EulerRationalScale::to_string() const {
  if (den_.is_constant() && den_ == EulerPolynomial(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace harmonic2v

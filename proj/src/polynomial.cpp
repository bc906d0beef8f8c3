#include "harmonic2v/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "harmonic2v/errors.hpp"

namespace harmonic2v {

namespace {

void check_dimension(int m, int lowest) {
  if (m < lowest || m > kMaxDimension) {
    throw InvalidDimension("dimension m=" + std::to_string(m) + " outside [" +
                           std::to_string(lowest) + ", " + std::to_string(kMaxDimension) + "]");
  }
}

bool descending(const Polynomial::Term& a, const Polynomial::Term& b) { return b.first < a.first; }

}  // namespace

Polynomial::Polynomial(int m) : m_(m) { check_dimension(m, 5); }

Polynomial Polynomial::low_dimensional(int m) {
  check_dimension(m, 1);
  return Polynomial(m, {}, true);
}

Polynomial Polynomial::constant(int m, const GaussianRational& c) {
  Polynomial p(m);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial(m), c);
  return p;
}

Polynomial Polynomial::variable(int m, Variable v) {
  if (v.index < 1 || v.index > m) {
    throw VariableOutOfRange("variable index " + std::to_string(v.index) +
                             " outside 1.." + std::to_string(m));
  }
  Monomial mono(m);
  mono.set(v, 1);
  return monomial(mono);
}

Polynomial Polynomial::monomial(const Monomial& mono, const GaussianRational& c) {
  Polynomial p = low_dimensional(mono.m());
  if (!c.is_zero()) p.terms_.emplace_back(mono, c);
  return p;
}

Polynomial Polynomial::from_terms(int m, std::vector<Term> terms) {
  check_dimension(m, 1);
  PolynomialBuilder b(m);
  for (auto& [mono, c] : terms) {
    if (mono.m() != m) throw DimensionMismatch("monomial dimension differs from polynomial");
    b.add(mono, std::move(c));
  }
  return std::move(b).build();
}

Polynomial Polynomial::norm_sq_x(int m) {
  std::vector<Term> terms;
  for (int j = 1; j <= m; ++j) {
    Monomial mono(m);
    mono.set(Variable::x(j), 2);
    terms.emplace_back(mono, 1);
  }
  return from_terms(m, std::move(terms));
}

Polynomial Polynomial::norm_sq_u(int m) {
  std::vector<Term> terms;
  for (int j = 1; j <= m; ++j) {
    Monomial mono(m);
    mono.set(Variable::u(j), 2);
    terms.emplace_back(mono, 1);
  }
  return from_terms(m, std::move(terms));
}

Polynomial Polynomial::inner_ux(int m) {
  std::vector<Term> terms;
  for (int j = 1; j <= m; ++j) {
    Monomial mono(m);
    mono.set(Variable::x(j), 1);
    mono.set(Variable::u(j), 1);
    terms.emplace_back(mono, 1);
  }
  return from_terms(m, std::move(terms));
}

GaussianRational Polynomial::coefficient(const Monomial& mono) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), mono,
                             [](const Term& t, const Monomial& key) { return key < t.first; });
  if (it != terms_.end() && it->first == mono) return it->second;
  return {};
}

GaussianRational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().first.total_degree() == 0) return terms_.back().second;
  return {};
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.front().first.total_degree();
}

bool Polynomial::is_bihomogeneous() const {
  if (terms_.empty()) return true;
  const Bidegree first = terms_.front().first.bidegree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.first.bidegree() == first; });
}

Bidegree Polynomial::bidegree() const {
  if (terms_.empty()) throw InvalidArgument("zero polynomial has no bidegree");
  if (!is_bihomogeneous()) throw InvalidArgument("polynomial is not bihomogeneous");
  return terms_.front().first.bidegree();
}

bool Polynomial::is_x_only() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first.u_degree() == 0; });
}

Polynomial Polynomial::conj() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second = t.second.conj();
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_dimension(*this, other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && b->first < a->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || a->first < b->first) {
      merged.push_back(*b++);
    } else {
      GaussianRational c = std::move(a->second);
      c += b->second;
      if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_dimension(a, b);
  PolynomialBuilder builder(a.m());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) builder.add(ma * mb, ca * cb);
  }
  return std::move(builder).build();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    const bool unit_monomial = mono.total_degree() == 0;
    std::string coeff;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      mpq_class mag = abs(c.re());
      if (mag != 1 || unit_monomial) coeff = rational_to_string(mag);
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      mpq_class mag = abs(c.im());
      coeff = mag == 1 ? "i" : rational_to_string(mag) + "*i";
    } else {
      std::string im = rational_to_string(abs(c.im()));
      coeff = "(" + rational_to_string(c.re()) + (sgn(c.im()) < 0 ? " - " : " + ") + im + "*i)";
    }
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (unit_monomial) {
      out += coeff;
    } else if (coeff.empty()) {
      out += mono.to_string();
    } else {
      out += coeff + "*" + mono.to_string();
    }
  }
  return out;
}

void PolynomialBuilder::add(const Monomial& mono, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(mono, c);
  if (!inserted) it->second += c;
}

void PolynomialBuilder::add(const Monomial& mono, GaussianRational&& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(mono, std::move(c));
  if (!inserted) it->second += c;
}

void PolynomialBuilder::add(const Polynomial& p) {
  for (const auto& [mono, c] : p.terms()) add(mono, c);
}

void PolynomialBuilder::add_scaled(const Polynomial& p, const GaussianRational& c) {
  if (c.is_zero()) return;
  for (const auto& [mono, coeff] : p.terms()) add(mono, coeff * c);
}

void PolynomialBuilder::add_scaled(const Polynomial& p, const mpq_class& c) {
  if (sgn(c) == 0) return;
  if (c == 1) {
    add(p);
    return;
  }
  for (const auto& [mono, coeff] : p.terms()) {
    GaussianRational scaled = coeff;
    scaled *= c;
    add(mono, std::move(scaled));
  }
}

Polynomial PolynomialBuilder::build() && {
  std::vector<Polynomial::Term> terms;
  terms.reserve(acc_.size());
  for (auto& [mono, c] : acc_) {
    if (!c.is_zero()) terms.emplace_back(mono, std::move(c));
  }
  acc_.clear();
  std::sort(terms.begin(), terms.end(), descending);
  return Polynomial(m_, std::move(terms), true);
}

void require_same_dimension(const Polynomial& a, const Polynomial& b) {
  if (a.m() != b.m()) {
    throw DimensionMismatch("polynomials live in dimensions " + std::to_string(a.m()) + " and " +
                            std::to_string(b.m()));
  }
}

void require_operator_dimension(int m) {
  if (m <= 4) {
    throw InvalidDimension("m=" + std::to_string(m) + " is not supported here; need m > 4");
  }
}

Polynomial partial(const Polynomial& p, Variable v) {
  if (v.index < 1 || v.index > p.m()) {
    throw VariableOutOfRange("variable index " + std::to_string(v.index) + " outside 1.." +
                             std::to_string(p.m()));
  }
  const int slot = v.slot(p.m());
  std::vector<Polynomial::Term> terms;
  for (const auto& [mono, c] : p.terms()) {
    const int e = mono[slot];
    if (e == 0) continue;
    Monomial d = mono;
    d.set(slot, e - 1);
    GaussianRational coeff = c;
    coeff *= static_cast<long>(e);
    terms.emplace_back(d, std::move(coeff));
  }
  // Differentiation is injective on the surviving monomials, so no merging is
  // needed, but graded order must be restored.
  return Polynomial::from_terms(p.m(), std::move(terms));
}

std::map<Bidegree, Polynomial> bidegree_split(const Polynomial& p) {
  std::map<Bidegree, std::vector<Polynomial::Term>> buckets;
  for (const auto& t : p.terms()) buckets[t.first.bidegree()].push_back(t);
  std::map<Bidegree, Polynomial> out;
  for (auto& [bd, terms] : buckets) out.emplace(bd, Polynomial::from_terms(p.m(), std::move(terms)));
  return out;
}

Polynomial power(const Polynomial& p, int n) {
  if (n < 0) throw InvalidArgument("negative polynomial power");
  Polynomial result = Polynomial::monomial(Monomial(p.m()));
  Polynomial base = p;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial swap_blocks(const Polynomial& p) {
  const int m = p.m();
  std::vector<Polynomial::Term> terms;
  terms.reserve(p.size());
  for (const auto& [mono, c] : p.terms()) {
    Monomial s(m);
    for (int j = 0; j < m; ++j) {
      s.set(j, mono[m + j]);
      s.set(m + j, mono[j]);
    }
    terms.emplace_back(s, c);
  }
  return Polynomial::from_terms(m, std::move(terms));
}

Polynomial substitute_linear(const Polynomial& p, const std::vector<std::vector<mpq_class>>& g) {
  const int m = p.m();
  if (static_cast<int>(g.size()) != m) throw DimensionMismatch("substitution matrix size");
  // Images of every variable: x_r -> sum_c g[r][c] x_c, likewise for u.
  std::vector<Polynomial> images;
  images.reserve(2 * m);
  for (int block = 0; block < 2; ++block) {
    for (int r = 0; r < m; ++r) {
      if (static_cast<int>(g[r].size()) != m) throw DimensionMismatch("substitution matrix size");
      std::vector<Polynomial::Term> terms;
      for (int c = 0; c < m; ++c) {
        Monomial mono(m);
        mono.set(block * m + c, 1);
        terms.emplace_back(mono, GaussianRational(g[r][c]));
      }
      images.push_back(Polynomial::from_terms(m, std::move(terms)));
    }
  }
  PolynomialBuilder out(m);
  for (const auto& [mono, c] : p.terms()) {
    Polynomial prod = Polynomial::constant(m, c);
    for (int s = 0; s < 2 * m; ++s) {
      if (mono[s] > 0) prod = prod * power(images[s], mono[s]);
    }
    out.add(prod);
  }
  return std::move(out).build();
}

std::pair<double, double> evaluate(const Polynomial& p, std::span<const double> x,
                                   std::span<const double> u) {
  const int m = p.m();
  if (static_cast<int>(x.size()) != m || static_cast<int>(u.size()) != m) {
    throw DimensionMismatch("evaluation point has the wrong length");
  }
  double re = 0.0;
  double im = 0.0;
  for (const auto& [mono, c] : p.terms()) {
    double v = 1.0;
    for (int s = 0; s < 2 * m; ++s) {
      if (mono[s] > 0) v *= std::pow(s < m ? x[s] : u[s - m], mono[s]);
    }
    re += c.re().get_d() * v;
    im += c.im().get_d() * v;
  }
  return {re, im};
}

}  // namespace harmonic2v

#include "harmonic2v/monomial.hpp"

#include <cstring>

#include "harmonic2v/errors.hpp"

namespace harmonic2v {

void Monomial::set(int slot, int value) {
  if (value < 0 || value > kMaxExponent) {
    throw InvalidArgument("monomial exponent " + std::to_string(value) + " out of range");
  }
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[slot] + value);
  exps_[slot] = static_cast<std::uint8_t>(value);
}

int Monomial::x_degree() const noexcept {
  int d = 0;
  for (int s = 0; s < m_; ++s) d += exps_[s];
  return d;
}

int Monomial::u_degree() const noexcept {
  int d = 0;
  for (int s = m_; s < 2 * m_; ++s) d += exps_[s];
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out(m_);
  for (int s = 0; s < 2 * m_; ++s) out.set(s, exps_[s] + other.exps_[s]);
  return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const noexcept {
  if (auto c = degree_ <=> other.degree_; c != 0) return c;
  // Unsigned bytewise comparison is slot-by-slot lexicographic order.
  const int c = std::memcmp(exps_.data(), other.exps_.data(), exps_.size());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::size_t Monomial::hash() const noexcept {
  // FNV-1a over the active slots.
  std::uint64_t h = 1469598103934665603ULL;
  for (int s = 0; s < 2 * m_; ++s) {
    h ^= exps_[s];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::string Monomial::to_string() const {
  std::string out;
  auto emit = [&](char name, int index, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    out += std::to_string(index);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  };
  for (int j = 1; j <= m_; ++j) emit('x', j, x(j));
  for (int j = 1; j <= m_; ++j) emit('u', j, u(j));
  return out.empty() ? "1" : out;
}

}  // namespace harmonic2v

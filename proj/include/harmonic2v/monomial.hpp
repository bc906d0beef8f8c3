#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

namespace harmonic2v {

/// Largest ambient dimension supported by the inline exponent storage.
inline constexpr int kMaxDimension = 32;

/// Exponents are stored inline; a single exponent is at most this value.
inline constexpr int kMaxExponent = 255;

/// Bidegree (k, l): homogeneity degree in x and in u.
struct Bidegree {
  int k = 0;
  int l = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// One of x_1..x_m or u_1..u_m. `index` is 1-based.
struct Variable {
  enum class Block : std::uint8_t { x, u };
  Block block = Block::x;
  int index = 1;

  static Variable x(int index) { return {Block::x, index}; }
  static Variable u(int index) { return {Block::u, index}; }

  /// Slot in the packed exponent array of a monomial in dimension m.
  int slot(int m) const { return block == Block::x ? index - 1 : m + index - 1; }

  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Exponent vector (x_1..x_m, u_1..u_m) packed into a fixed-size array.
///
/// Slots [0, m) hold the x exponents and [m, 2m) the u exponents; the tail is
/// always zero so comparisons and hashing can run over the full array.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int m) : m_(static_cast<std::uint8_t>(m)) {}

  int m() const noexcept { return m_; }

  int x(int index) const { return exps_[index - 1]; }
  int u(int index) const { return exps_[m_ + index - 1]; }
  int operator[](int slot) const { return exps_[slot]; }
  int exponent(Variable v) const { return exps_[v.slot(m_)]; }

  void set(int slot, int value);
  void set(Variable v, int value) { set(v.slot(m_), value); }
  void bump(int slot, int delta) { set(slot, exps_[slot] + delta); }

  int x_degree() const noexcept;
  int u_degree() const noexcept;
  int total_degree() const noexcept { return degree_; }
  Bidegree bidegree() const noexcept { return {x_degree(), u_degree()}; }

  /// Componentwise sum of exponent vectors.
  Monomial operator*(const Monomial& other) const;

  /// Graded lexicographic order: total degree first, then exponents slot by
  /// slot (x_1 before x_2 before ... before u_m).
  std::strong_ordering operator<=>(const Monomial& other) const noexcept;
  bool operator==(const Monomial& other) const noexcept { return exps_ == other.exps_; }

  std::size_t hash() const noexcept;

  /// Text such as "x1^2*u3", or "1" for the empty monomial.
  std::string to_string() const;

 private:
  std::array<std::uint8_t, 2 * kMaxDimension> exps_{};
  std::uint16_t degree_ = 0;  // cached sum of all exponents
  std::uint8_t m_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& mono) const noexcept { return mono.hash(); }
};

}  // namespace harmonic2v

#include "harmonic2v/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <utility>

#include "harmonic2v/errors.hpp"
#include "harmonic2v/rational_util.hpp"

namespace harmonic2v {

void random_stiefel_frame(std::mt19937_64& rng, int m, double* omega, double* eta) {
  std::normal_distribution<double> normal;
  for (;;) {
    double n1 = 0.0;
    for (int i = 0; i < m; ++i) {
      omega[i] = normal(rng);
      n1 += omega[i] * omega[i];
    }
    double dot = 0.0;
    for (int i = 0; i < m; ++i) {
      eta[i] = normal(rng);
      dot += eta[i] * omega[i];
    }
    n1 = std::sqrt(n1);
    if (n1 < 1e-12) continue;
    dot /= n1;
    double n2 = 0.0;
    for (int i = 0; i < m; ++i) {
      omega[i] /= n1;
      eta[i] -= dot * omega[i];
      n2 += eta[i] * eta[i];
    }
    n2 = std::sqrt(n2);
    if (n2 < 1e-12) continue;
    for (int i = 0; i < m; ++i) eta[i] /= n2;
    return;
  }
}

namespace {

struct Factor {
  int slot;
  int exponent;
};

struct CompiledTerm {
  double re;
  double im;
  std::vector<Factor> factors;
};

struct CompiledPoly {
  std::vector<CompiledTerm> terms;
  bool complex = false;
};

CompiledPoly compile(const Polynomial& p, int& max_exponent) {
  CompiledPoly out;
  for (const auto& [mono, c] : p.terms()) {
    CompiledTerm t{c.re().get_d(), c.im().get_d(), {}};
    if (!c.is_real()) out.complex = true;
    for (int s = 0; s < 2 * p.m(); ++s) {
      if (mono[s] == 0) continue;
      t.factors.push_back({s, mono[s]});
      max_exponent = std::max(max_exponent, static_cast<int>(mono[s]));
    }
    out.terms.push_back(std::move(t));
  }
  return out;
}

// Running mean and centred second moment; merged with the pairwise update.
struct Moments {
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double v) {
    n += 1.0;
    const double d = v - mean;
    mean += d / n;
    m2 += d * (v - mean);
  }
  void merge(const Moments& o) {
    if (o.n == 0.0) return;
    const double total = n + o.n;
    const double d = o.mean - mean;
    mean += d * o.n / total;
    m2 += o.m2 + d * d * n * o.n / total;
    n = total;
  }
  double std_error() const { return n > 1.0 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0; }
};

struct BlockResult {
  std::vector<Moments> re;
  std::vector<Moments> im;
};

BlockResult run_block(const std::vector<CompiledPoly>& polys, int m, int max_exponent,
                      std::uint64_t seed, std::uint64_t block, std::uint64_t count) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffULL),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block & 0xffffffffULL),
                    static_cast<std::uint32_t>(block >> 32)};
  std::mt19937_64 rng(seq);
  BlockResult out{std::vector<Moments>(polys.size()), std::vector<Moments>(polys.size())};

  const int stride = max_exponent + 1;
  std::vector<double> frame(2 * static_cast<std::size_t>(m));
  std::vector<double> pw(2 * static_cast<std::size_t>(m) * stride);
  for (std::uint64_t s = 0; s < count; ++s) {
    random_stiefel_frame(rng, m, frame.data(), frame.data() + m);
    for (int slot = 0; slot < 2 * m; ++slot) {
      double* row = pw.data() + static_cast<std::size_t>(slot) * stride;
      row[0] = 1.0;
      for (int e = 1; e <= max_exponent; ++e) row[e] = row[e - 1] * frame[slot];
    }
    for (std::size_t k = 0; k < polys.size(); ++k) {
      double re = 0.0;
      double im = 0.0;
      for (const auto& t : polys[k].terms) {
        double v = 1.0;
        for (const auto& f : t.factors) v *= pw[static_cast<std::size_t>(f.slot) * stride + f.exponent];
        re += t.re * v;
        im += t.im * v;
      }
      out.re[k].push(re);
      if (polys[k].complex) out.im[k].push(im);
    }
  }
  return out;
}

}  // namespace

std::vector<McEstimate> stiefel_monte_carlo_batch(std::span<const Polynomial> polys,
                                                  const McOptions& options) {
  if (options.samples == 0) throw InvalidArgument("Monte Carlo needs at least one sample");
  if (polys.empty()) return {};
  const int m = polys.front().m();
  if (m < 2) throw InvalidDimension("Stiefel frames need m >= 2");
  int max_exponent = 1;
  std::vector<CompiledPoly> compiled;
  for (const auto& p : polys) {
    if (p.m() != m) throw DimensionMismatch("batch polynomials must share m");
    compiled.push_back(compile(p, max_exponent));
  }

  const std::uint64_t blocks = (options.samples + kMcBlockSize - 1) / kMcBlockSize;
  std::vector<BlockResult> results(blocks);
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (std::uint64_t b = next++; b < blocks; b = next++) {
      const std::uint64_t count = std::min(kMcBlockSize, options.samples - b * kMcBlockSize);
      results[b] = run_block(compiled, m, max_exponent, options.seed, b, count);
    }
  };
  const unsigned workers =
      static_cast<unsigned>(std::clamp<std::uint64_t>(options.workers, 1, blocks));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  std::vector<Moments> re(polys.size());
  std::vector<Moments> im(polys.size());
  for (const auto& r : results) {
    for (std::size_t k = 0; k < polys.size(); ++k) {
      re[k].merge(r.re[k]);
      im[k].merge(r.im[k]);
    }
  }
  std::vector<McEstimate> out(polys.size());
  for (std::size_t k = 0; k < polys.size(); ++k) {
    out[k] = {re[k].mean, re[k].std_error(), im[k].mean, im[k].std_error(), options.samples};
  }
  return out;
}

McEstimate stiefel_monte_carlo(const Polynomial& p, const McOptions& options) {
  return stiefel_monte_carlo_batch(std::span<const Polynomial>(&p, 1), options).front();
}

Polynomial stiefel_symmetrize(const Monomial& mono) {
  const int m = mono.m();
  Polynomial zero = Polynomial::low_dimensional(m);
  for (int i = 0; i < m; ++i) {
    if ((mono[i] + mono[m + i]) % 2 != 0) return zero;
  }
  if (mono.x_degree() % 2 != 0) return zero;

  // The surviving monomial is fixed by every sign change, so only the
  // permutation orbit of its non-trivial columns and the swap remain.
  std::vector<std::pair<int, int>> columns;
  for (int i = 0; i < m; ++i) {
    if (mono[i] + mono[m + i] > 0) columns.emplace_back(mono[i], mono[m + i]);
  }
  const int r = static_cast<int>(columns.size());
  mpz_class maps = 1;
  for (int t = 0; t < r; ++t) maps *= m - t;
  const GaussianRational weight(mpq_class(1) / (2 * mpq_class(maps)));

  PolynomialBuilder sum(m);
  std::vector<int> target(r);
  std::vector<bool> used(m, false);
  auto place = [&](auto&& self, int t) -> void {
    if (t == r) {
      Monomial a(m);
      Monomial b(m);
      for (int c = 0; c < r; ++c) {
        a.set(target[c], columns[c].first);
        a.set(m + target[c], columns[c].second);
        b.set(target[c], columns[c].second);
        b.set(m + target[c], columns[c].first);
      }
      sum.add(a, weight);
      sum.add(b, weight);
      return;
    }
    for (int i = 0; i < m; ++i) {
      if (used[i]) continue;
      used[i] = true;
      target[t] = i;
      self(self, t + 1);
      used[i] = false;
    }
  };
  place(place, 0);
  return std::move(sum).build();
}

std::vector<McEstimate> stiefel_monte_carlo_monomials(std::span<const Monomial> monos,
                                                      const McOptions& options) {
  std::vector<McEstimate> out(monos.size());
  std::map<std::string, std::size_t> classes;
  std::vector<Polynomial> distinct;
  std::vector<std::ptrdiff_t> owner(monos.size(), -1);
  for (std::size_t n = 0; n < monos.size(); ++n) {
    Polynomial s = stiefel_symmetrize(monos[n]);
    if (s.is_zero()) {
      out[n].samples = options.samples;
      continue;
    }
    auto [it, inserted] = classes.try_emplace(s.to_string(), distinct.size());
    if (inserted) distinct.push_back(std::move(s));
    owner[n] = static_cast<std::ptrdiff_t>(it->second);
  }
  const auto estimates = stiefel_monte_carlo_batch(distinct, options);
  for (std::size_t n = 0; n < monos.size(); ++n) {
    if (owner[n] >= 0) out[n] = estimates[static_cast<std::size_t>(owner[n])];
  }
  return out;
}

}  // namespace harmonic2v

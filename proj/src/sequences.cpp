#include "sequences.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "series.hpp"

namespace derange {

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Integer multinomial(unsigned k, const std::vector<unsigned>& parts) {
  unsigned long sum = 0;
  for (unsigned p : parts) sum += p;
  if (sum != k) throw std::invalid_argument("composition mismatch");
  Integer r = factorial(k);
  for (unsigned p : parts) mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), factorial(p).get_mpz_t());
  return r;
}

Integer derangement_number_alternating(unsigned n) {
  // n! sum_{k=0..n} (-1)^k / k!  ==  sum_k binom(n,k) (n-k)! (-1)^k
  Integer acc(0);
  for (unsigned k = 0; k <= n; ++k) {
    Integer term = binomial(n, k) * factorial(n - k);
    if (k % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

Integer derangement_number(unsigned n) {
  static std::mutex mu;
  static std::vector<Integer> table{Integer(1)};  // D_0 = 1
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) {
    unsigned k = static_cast<unsigned>(table.size());
    Integer next = Integer(k) * table[k - 1] + (k % 2 == 0 ? 1 : -1);
    if (next != derangement_number_alternating(k))
      throw std::logic_error("internal cross-check failure: derangement recurrence vs closed form");
    table.push_back(std::move(next));
  }
  return table[n];
}

Integer brute_force_derangements(unsigned n) {
  if (n > 9) throw std::domain_error("oracle too large");
  std::vector<unsigned> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  Integer count(0);
  do {
    bool fixed = false;
    for (unsigned i = 0; i < n; ++i)
      if (perm[i] == i) {
        fixed = true;
        break;
      }
    if (!fixed) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

// Grows one triangle row at a time under its own lock.
// FirstKindSigned: s(n+1,k) = s(n,k-1) - n s(n,k)
// SecondKind:      S(n+1,k) = k S(n,k) + S(n,k-1)
const std::vector<Integer>& stirling_row(TriangleKind kind, unsigned n) {
  static std::mutex mu;
  static std::vector<std::vector<Integer>> first{{Integer(1)}};
  static std::vector<std::vector<Integer>> second{{Integer(1)}};
  std::lock_guard<std::mutex> lock(mu);
  auto& rows = (kind == TriangleKind::FirstKindSigned) ? first : second;
  while (rows.size() <= n) {
    unsigned m = static_cast<unsigned>(rows.size());  // building row m from row m-1
    const auto& prev = rows[m - 1];
    std::vector<Integer> row(m + 1, Integer(0));
    for (unsigned k = 1; k <= m; ++k) row[k] = prev[k - 1];
    for (unsigned k = 0; k < m; ++k) {
      if (kind == TriangleKind::FirstKindSigned)
        row[k] -= Integer(m - 1) * prev[k];
      else
        row[k] += Integer(k) * prev[k];
    }
    rows.push_back(std::move(row));
  }
  return rows[n];
}

}  // namespace

Integer stirling_first(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  return stirling_row(TriangleKind::FirstKindSigned, n)[k];
}

Integer stirling_second(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  return stirling_row(TriangleKind::SecondKind, n)[k];
}

Poly falling_factorial(unsigned n) {
  Poly p(Rational(1));
  for (unsigned i = 0; i < n; ++i)
    p *= Poly(std::vector<Rational>{Rational(-long(i)), Rational(1)});
  return p;
}

Poly bell_polynomial(unsigned n) {
  std::vector<Rational> coeffs(n + 1, Rational(0));
  for (unsigned k = 0; k <= n; ++k) coeffs[k] = Rational(stirling_second(n, k));
  return Poly(std::move(coeffs));
}

Integer bell_number(unsigned n) {
  Rational v = bell_polynomial(n).eval(Rational(1));
  return v.num();  // always an integer
}

Rational euler_number(unsigned n) {
  static std::mutex mu;
  static std::vector<Rational> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() <= n) {
    unsigned order = n + 8;
    TruncatedSeries denom = TruncatedSeries::exp_ct(Rational(1), order) + TruncatedSeries::one(order);
    TruncatedSeries e = (Rational(2) * TruncatedSeries::one(order)) / denom;
    cache.resize(order + 1);
    for (unsigned k = 0; k <= order; ++k) cache[k] = e.egf_coeff(k);
  }
  return cache[n];
}

SequenceTable sequence_table(SequenceKind kind, unsigned n_max) {
  SequenceTable t{kind, {}};
  t.values.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    switch (kind) {
      case SequenceKind::Derangement: t.values.emplace_back(derangement_number(n)); break;
      case SequenceKind::Bell: t.values.emplace_back(bell_number(n)); break;
      case SequenceKind::Euler: t.values.push_back(euler_number(n)); break;
      case SequenceKind::Factorial: t.values.emplace_back(factorial(n)); break;
    }
  }
  return t;
}

StirlingTriangle stirling_triangle(TriangleKind kind, unsigned n_max) {
  StirlingTriangle t{kind, {}};
  t.rows.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) t.rows.push_back(stirling_row(kind, n));
  return t;
}

}  // namespace derange

#pragma once

#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace derange {

Integer factorial(unsigned n);
// 0 when k > n.
Integer binomial(unsigned n, unsigned k);
// k! / (parts[0]! * ... * parts[r-1]!); the parts must sum to k.
Integer multinomial(unsigned k, const std::vector<unsigned>& parts);

// Number of fixed-point-free permutations of n elements, by the recurrence
// D_n = n D_{n-1} + (-1)^n; every freshly computed entry is checked against
// the alternating-sum closed form n! sum_k (-1)^k / k!.
Integer derangement_number(unsigned n);
// The alternating-sum closed form on its own.
Integer derangement_number_alternating(unsigned n);
// Definitional oracle: walks all n! permutations and counts the ones
// without fixed points. Capped at n <= 9.
Integer brute_force_derangements(unsigned n);

// Signed Stirling numbers of the first kind / Stirling numbers of the
// second kind. k > n yields 0.
Integer stirling_first(unsigned n, unsigned k);
Integer stirling_second(unsigned n, unsigned k);

// (x)_n = x (x-1) ... (x-n+1), with (x)_0 = 1.
Poly falling_factorial(unsigned n);

// Bel_n(x) = sum_k S2(n,k) x^k.
Poly bell_polynomial(unsigned n);
Integer bell_number(unsigned n);

// Rational Euler numbers: n! times the n-th coefficient of 2/(e^t + 1).
Rational euler_number(unsigned n);

enum class SequenceKind { Derangement, Bell, Euler, Factorial };
struct SequenceTable {
  SequenceKind kind;
  std::vector<Rational> values;  // indexed by n
};
SequenceTable sequence_table(SequenceKind kind, unsigned n_max);

enum class TriangleKind { FirstKindSigned, SecondKind };
struct StirlingTriangle {
  TriangleKind kind;
  std::vector<std::vector<Integer>> rows;  // rows[n][k], 0 <= k <= n
};
StirlingTriangle stirling_triangle(TriangleKind kind, unsigned n_max);

}  // namespace derange

#pragma once

#include "poly.hpp"
#include "rational.hpp"

namespace derange {

// D_n(x): monic, degree n, constant term D_n, D_n(1) = n!.
// Built from both closed forms, which are asserted equal.
Poly derangement_poly(unsigned n);
// n! sum_{m<=n} (x-1)^m / m!
Poly derangement_poly_taylor_form(unsigned n);
// sum_l binom(n,l) D_l x^{n-l}
Poly derangement_poly_binomial_form(unsigned n);

// Combinatorial oracle: sum over all permutations of {1..n} of x^{#fixed points}.
// Capped at n <= 8.
Poly fixed_point_enumerator(unsigned n);

enum class TrigKind { Cosine, Sine };

// The cosine/sine companions of D_n(x): bivariate in (x, y), equal to the
// real resp. imaginary part of D_n(x + iy). The cosine build uses the
// double sum over even y-powers with derangement-number weights; the sine
// build attaches odd y-powers to lower-index D polynomials. Each result is
// cross-checked against independent expansions before being returned.
BiPoly cosine_derangement(unsigned n);
BiPoly sine_derangement(unsigned n);

// Alternative routes, kept separate so the identity suite can compare them.
BiPoly cosine_via_complex_pair(unsigned n);  // (n!/2) sum_m ((x-1+iy)^m + (x-1-iy)^m)/m!
BiPoly sine_via_complex_pair(unsigned n);    // (n!/2i) sum_m ((x-1+iy)^m - (x-1-iy)^m)/m!
BiPoly sine_via_double_sum(unsigned n);      // sum over j of binom(n,j) x/y-split with D_{n-j}

// D_n(z) for Gaussian-rational z, evaluated exactly from the Taylor-style
// closed form.
GaussianRational derangement_complex_eval(unsigned n, const GaussianRational& z);

}  // namespace derange

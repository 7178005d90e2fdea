#pragma once

// Dense univariate integer polynomials, index = degree. Internal helpers for
// LaurentPoly and RatFunc; an empty vector is the zero polynomial.

#include <gmpxx.h>

#include <vector>

namespace webgram::detail {

using Poly = std::vector<mpz_class>;

void trim(Poly& p);
int degree(const Poly& p);
Poly mul(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);

mpz_class content(const Poly& p);
Poly primitive_part(const Poly& p);  // leading coefficient made positive

// a = q * b exactly, or returns false.
bool divexact(const Poly& a, const Poly& b, Poly& q);
Poly pseudo_remainder(const Poly& a, const Poly& b);

// Greatest common divisor in Z[x], primitive with positive leading coefficient.
// Heuristic evaluation gcd with a primitive remainder sequence fallback.
Poly gcd(const Poly& a, const Poly& b);
Poly gcd_prs(const Poly& a, const Poly& b);

// Evaluation at 2^bits and balanced base-2^bits recovery.
mpz_class pack(const Poly& p, unsigned long bits);
Poly unpack_balanced(mpz_class v, unsigned long bits);

unsigned long max_coeff_bits(const Poly& p);

}  // namespace webgram::detail

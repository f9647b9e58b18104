#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;  // always canonical: lowest terms, positive denominator

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;
using IntMatrix = std::vector<IntVector>;  // row-major
using RatMatrix = std::vector<RatVector>;

// Builds num/den in lowest terms. Throws InputError on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

// Parses "a" or "a/b" with optional leading '-'. Decimal points and exponents
// are rejected so that no floating value can leak into a computation.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Decimal rendering with `digits` digits after the point, rounded half away
// from zero. Display only.
std::string to_decimal(const Rational& r, int digits = 20);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

IntVector make_int_vector(std::initializer_list<long> values);
RatVector to_rational(const IntVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);
Rational dot(const RatVector& a, const RatVector& b);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

// gcd of the absolute values of the coordinates; 0 for the zero vector.
Integer content(const IntVector& v);

// Scales a nonzero rational vector to the primitive integer vector on the same ray.
IntVector primitive_on_ray(const RatVector& v);

// Row rank over the rationals.
std::size_t rank(const RatMatrix& rows);
std::size_t rank(const IntMatrix& rows);

Rational determinant(RatMatrix m);
Integer determinant(const IntMatrix& m);

// Solves x·A = b where rows of A are a_i, i.e. finds x with sum_i x_i a_i = b.
// Returns false when inconsistent.
bool solve_combination(const RatMatrix& rows, const RatVector& target, RatVector& coefficients);

// Solves A w = b (A given by rows). Returns false when inconsistent; free
// variables are set to zero.
bool solve_linear(const RatMatrix& a, const RatVector& b, RatVector& solution);

}  // namespace toric

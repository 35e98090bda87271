#ifndef CASIMIR_SPECFUN_HPP
#define CASIMIR_SPECFUN_HPP

#include <cstddef>

namespace casimir::specfun {

// Upper bound on arguments accepted by log_factorial.
inline constexpr long kMaxArgument = 1000000;

// Grow the shared ln(n!) table to cover arguments up to max_n. Thread-safe;
// call once before hot loops so lookups stay lock-free.
void ensure_tables(long max_n);

// ln(n!) with relative error <= 1e-13; exact-product table for n <= 20.
double log_factorial(long n);

// ln(n!!) with n!! = n(n-2)(n-4)...; 0!! = 1!! = 1.
double log_double_factorial(long n);

// ln C(n, k).
double log_binomial(long n, long k);

}  // namespace casimir::specfun

#endif

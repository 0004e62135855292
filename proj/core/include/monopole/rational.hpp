#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace monopole {

using Rat = mpq_class;
using Int = mpz_class;
using Complex = std::complex<double>;

// Parses "p", "p/q" or a terminating decimal such as "-1.25". Throws
// Error(parse_error) on anything else or a zero denominator.
Rat parse_rat(std::string_view text);

// Canonical textual form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& value);

inline Complex to_complex(const Rat& value) { return Complex(value.get_d(), 0.0); }

}  // namespace monopole

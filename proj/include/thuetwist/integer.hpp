/*
   Copyright 2026 The thuetwist authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef THUETWIST_INTEGER_HPP
#define THUETWIST_INTEGER_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "thuetwist/errors.hpp"

namespace thuetwist {

// Arbitrary-precision integers and rationals. GMP already provides canonical
// sign+magnitude integers and gcd-reduced rationals with positive denominator,
// which is exactly the representation contract we need, so we use it as-is.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer int_gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer int_lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer int_abs(const Integer& a) {
    Integer r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

/// Exact quotient; the caller guarantees divisibility.
inline Integer int_divexact(const Integer& a, const Integer& b) {
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer int_pow(const Integer& a, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
}

inline std::string to_decimal(const Integer& a) { return a.get_str(10); }

inline Integer integer_from_decimal(const std::string& s) {
    Integer r;
    if (r.set_str(s, 10) != 0) throw domain_error("not a decimal integer: '" + s + "'");
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long_checked(const Integer& a, const char* what) {
    if (!a.fits_slong_p()) throw domain_error(std::string(what) + " out of machine range");
    return a.get_si();
}

}  // namespace thuetwist

#endif

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "stirling/field.hpp"

namespace stirling {

// Floating evaluation environment: `digits` decimal significant digits.
// Internally everything runs with guard digits on top of this, so results
// compared at `digits` have slack left over.
struct PrecisionContext {
    int digits;

    explicit PrecisionContext(int d = 64) : digits(d) {
        if (d < 16) throw std::invalid_argument("PrecisionContext: digits must be >= 16");
    }
};

using Real = mpf_class;

// Mantissa bits used for a context, guard digits included.
int working_bits(int digits);
int working_bits(const PrecisionContext& ctx);

inline Real make_real(int bits) { return Real(0, bits); }
Real to_real(const BigRat& r, int bits);
Real to_real(long v, int bits);

int sign_of(const Real& x);
Real abs_real(const Real& x);

// Floor of the base-10 exponent: largest e with 10^e <= |x|. x must be nonzero.
long exponent10(const Real& x);

// sqrt via integer square root of the scaled mantissa (no environment
// constants involved). x must be >= 0.
Real sqrt_pos(const Real& x, int bits);

// Cached constants, computed once per bit count.
const Real& const_sqrt2(int bits);   // isqrt(2 * 2^(2B)) / 2^B
const Real& const_pi(int bits);      // Machin arctangent series, exact rational partial sums
const Real& const_ln2(int bits);     // 2 * atanh(1/3)
const Real& const_e(int bits);       // exp(1)

Real exp_real(const Real& x, int bits);
Real ln_real(const Real& x, int bits);              // x > 0
Real pow_real(const Real& x, const Real& y, int bits);  // x > 0

// Round-to-nearest decimal rendering with `digits` significant digits.
// Plain notation for moderate exponents, otherwise "d.ddd...e+X"/"...e-X".
std::string to_decimal_string(const Real& x, int digits);

}  // namespace stirling

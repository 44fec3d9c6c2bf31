#pragma once

#include <vector>

#include "stirling/field.hpp"
#include "stirling/precision.hpp"

namespace stirling {

// MacLaurin coefficients a_0..a_N of the smooth factor y(v). Every entry the
// recurrence has produced so far is either a pure rational (odd index) or a
// pure rational multiple of sqrt 2 (even index); consumers that rely on that
// pattern must check it rather than assume it.
struct CoeffTable {
    std::vector<QSqrt2> coeffs;

    int max_index() const { return static_cast<int>(coeffs.size()) - 1; }
    const QSqrt2& a(int n) const { return coeffs.at(static_cast<std::size_t>(n)); }
};

// Exact rational coefficients c_0..c_N of the asymptotic refinement
//   Gamma(s+1) = (s/e)^s sqrt(2 pi s) [ sum_k c_k s^-k + o(s^-N) ].
struct StirlingSeries {
    std::vector<BigRat> coeffs;

    int max_index() const { return static_cast<int>(coeffs.size()) - 1; }
    const BigRat& c(int k) const { return coeffs.at(static_cast<std::size_t>(k)); }
};

// Thrown when an even-index coefficient unexpectedly has a rational part (or
// an odd-index one a sqrt-2 part) where pure parity is required.
class parity_error : public std::runtime_error {
public:
    parity_error(int index, const std::string& what) : std::runtime_error(what), index_(index) {}
    int index() const { return index_; }

private:
    int index_;
};

// a_0 = sqrt(2)/2, then for n >= 1
//   a_n = -2/(n+2) [ sum_{k+j+l=n, 0<=k,j,l<n} a_k a_j a_l
//                    + sum_{k+j=n-1} a_k a_j ].
// Exact in Q(sqrt 2); O(n^2) per coefficient.
CoeffTable compute_coefficients(int n_max);

// Shared immutable table, grown on demand.
const CoeffTable& shared_coefficients(int n_max);

// (2k)! / (4^k k!), the exact ratio Gamma(k+1/2) / Gamma(1/2).
BigRat gamma_half_integer_ratio(int k);

// c_k = 2 q_{2k} (2k)! / (4^k k!) where a_{2k} = q_{2k} sqrt 2.
// Throws parity_error if some needed a_{2k} has a nonzero rational part.
StirlingSeries stirling_coefficients(const CoeffTable& table);

// Horner evaluation of sum_{k<=n} a_k v^k.
Real maclaurin_eval(const CoeffTable& table, const Real& v, int n, const PrecisionContext& ctx);

}  // namespace stirling

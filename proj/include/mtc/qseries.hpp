#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "mtc/rational.hpp"

namespace mtc {

struct EvalResult {
    double value = 0.0;
    double bound = 0.0; // honest absolute error estimate (truncation + float)
};

// Truncated formal series sum_e c_e q^{e/D} with exact rational coefficients.
// All exponents lie on the lattice (1/D)Z. Terms with exponent <= order are
// exact; everything beyond is unknown (dropped at construction time), and
// every arithmetic operation propagates the truncation bound conservatively.
class PuiseuxSeries {
public:
    PuiseuxSeries() : denom_(1), order_(0) {}

    static PuiseuxSeries zero(const Rational& order);
    static PuiseuxSeries constant(const Rational& c, const Rational& order);
    static PuiseuxSeries monomial(const Rational& exponent, const Rational& coeff,
                                  const Rational& order);

    std::int64_t denom() const { return denom_; }
    const std::map<std::int64_t, Rational>& terms() const { return coeffs_; }
    const Rational& order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const { return coeffs_.size(); }

    Rational exponent_of(std::int64_t num) const { return make_rational(num, denom_); }
    // Coefficient at a given exponent (0 if absent or off-lattice).
    Rational coefficient(const Rational& exponent) const;
    Rational leading_exponent() const; // throws DomainError on the zero series
    Rational leading_coefficient() const;

    PuiseuxSeries truncated(const Rational& new_order) const;
    PuiseuxSeries rescaled(const Rational& a) const; // q -> q^a, a > 0
    PuiseuxSeries inverse() const;                   // throws DomainError if zero
    PuiseuxSeries pow(long e) const;

    PuiseuxSeries operator-() const;
    friend PuiseuxSeries operator+(const PuiseuxSeries& x, const PuiseuxSeries& y);
    friend PuiseuxSeries operator-(const PuiseuxSeries& x, const PuiseuxSeries& y);
    friend PuiseuxSeries operator*(const PuiseuxSeries& x, const PuiseuxSeries& y);
    friend PuiseuxSeries operator*(const Rational& c, const PuiseuxSeries& x);

    // Sum of stored terms at q = e^{-2 pi y}, y > 0, with an error bound.
    EvalResult eval(double y) const;

    // One line per term, "e_num/e_den<TAB>c_num/c_den", sorted by exponent.
    std::string dump() const;

    // Exact coefficient-wise equality after truncating both to the common bound.
    static bool agree_up_to_common_order(const PuiseuxSeries& x, const PuiseuxSeries& y);

private:
    PuiseuxSeries(std::int64_t denom, const Rational& order)
        : denom_(denom), order_(order) {}
    void insert(std::int64_t num, const Rational& c);
    PuiseuxSeries with_denom(std::int64_t new_denom) const;

    std::int64_t denom_;
    std::map<std::int64_t, Rational> coeffs_;
    Rational order_;
};

PuiseuxSeries div(const PuiseuxSeries& x, const PuiseuxSeries& y);

// q^{1/24} * prod_{n=1}^{n_terms} (1 - q^n). Exact through exponent
// n_terms + 1/24; declared order is exactly that.
PuiseuxSeries eta_series(long n_terms);

// sum_{n=-n_terms}^{n_terms} q^{k (n + r/(2k))^2} for 0 <= r < 2k.
// r = 0 is the rank-one lattice theta series; other cosets share the lattice
// (1/(4k))Z of exponents.
PuiseuxSeries theta_rank1_series(long k, long r, long n_terms);

} // namespace mtc

#include "mtc/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace mtc {

namespace {

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
    return a / std::gcd(a, b) * b;
}

Rational rat2(std::int64_t num, std::int64_t den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Largest integer numerator num with num/denom <= bound.
std::int64_t floor_num(const Rational& bound, std::int64_t denom) {
    Rational scaled = bound * Rational(denom);
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    return q.get_si();
}

} // namespace

PuiseuxSeries PuiseuxSeries::zero(const Rational& order) {
    return PuiseuxSeries(1, order);
}

PuiseuxSeries PuiseuxSeries::constant(const Rational& c, const Rational& order) {
    PuiseuxSeries s(1, order);
    s.insert(0, c);
    return s;
}

PuiseuxSeries PuiseuxSeries::monomial(const Rational& exponent, const Rational& coeff,
                                      const Rational& order) {
    std::int64_t d = mpz_class(exponent.get_den()).get_si();
    PuiseuxSeries s(d, order);
    s.insert(mpz_class(exponent.get_num()).get_si(), coeff);
    return s;
}

void PuiseuxSeries::insert(std::int64_t num, const Rational& c) {
    if (c == 0)
        return;
    if (rat2(num, denom_) > order_)
        return;
    auto it = coeffs_.find(num);
    if (it == coeffs_.end()) {
        coeffs_.emplace(num, c);
    } else {
        it->second += c;
        if (it->second == 0)
            coeffs_.erase(it);
    }
}

PuiseuxSeries PuiseuxSeries::with_denom(std::int64_t new_denom) const {
    if (new_denom == denom_)
        return *this;
    std::int64_t f = new_denom / denom_;
    PuiseuxSeries s(new_denom, order_);
    for (const auto& [e, c] : coeffs_)
        s.coeffs_.emplace(e * f, c);
    return s;
}

Rational PuiseuxSeries::coefficient(const Rational& exponent) const {
    Rational scaled = exponent * Rational(denom_);
    if (scaled.get_den() != 1)
        return Rational(0);
    auto it = coeffs_.find(mpz_class(scaled.get_num()).get_si());
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational PuiseuxSeries::leading_exponent() const {
    if (coeffs_.empty())
        throw DomainError("leading exponent of the zero series");
    return rat2(coeffs_.begin()->first, denom_);
}

Rational PuiseuxSeries::leading_coefficient() const {
    if (coeffs_.empty())
        throw DomainError("leading coefficient of the zero series");
    return coeffs_.begin()->second;
}

PuiseuxSeries PuiseuxSeries::truncated(const Rational& new_order) const {
    Rational o = std::min(order_, new_order);
    PuiseuxSeries s(denom_, o);
    std::int64_t cap = floor_num(o, denom_);
    for (const auto& [e, c] : coeffs_) {
        if (e > cap)
            break;
        s.coeffs_.emplace(e, c);
    }
    return s;
}

PuiseuxSeries PuiseuxSeries::rescaled(const Rational& a) const {
    if (a <= 0)
        throw DomainError("rescale exponent must be positive");
    std::int64_t an = mpz_class(a.get_num()).get_si();
    std::int64_t ad = mpz_class(a.get_den()).get_si();
    std::int64_t d = denom_ * ad;
    std::int64_t g = std::gcd(static_cast<std::int64_t>(std::abs(an)), d);
    PuiseuxSeries s(d / g, order_ * a);
    for (const auto& [e, c] : coeffs_)
        s.coeffs_.emplace(e * an / g, c);
    return s;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
    PuiseuxSeries s(denom_, order_);
    for (const auto& [e, c] : coeffs_)
        s.coeffs_.emplace(e, -c);
    return s;
}

PuiseuxSeries operator+(const PuiseuxSeries& x, const PuiseuxSeries& y) {
    std::int64_t d = lcm64(x.denom_, y.denom_);
    PuiseuxSeries a = x.with_denom(d), b = y.with_denom(d);
    PuiseuxSeries s(d, std::min(x.order_, y.order_));
    std::int64_t cap = floor_num(s.order_, d);
    for (const auto& [e, c] : a.coeffs_)
        if (e <= cap)
            s.insert(e, c);
    for (const auto& [e, c] : b.coeffs_)
        if (e <= cap)
            s.insert(e, c);
    return s;
}

PuiseuxSeries operator-(const PuiseuxSeries& x, const PuiseuxSeries& y) {
    return x + (-y);
}

PuiseuxSeries operator*(const Rational& c, const PuiseuxSeries& x) {
    PuiseuxSeries s(x.denom_, x.order_);
    if (c == 0)
        return s;
    for (const auto& [e, v] : x.coeffs_)
        s.coeffs_.emplace(e, c * v);
    return s;
}

PuiseuxSeries operator*(const PuiseuxSeries& x, const PuiseuxSeries& y) {
    std::int64_t d = lcm64(x.denom_, y.denom_);
    PuiseuxSeries a = x.with_denom(d), b = y.with_denom(d);

    // Unknown terms of x start past x.order and meet at least lead(y), and
    // symmetrically; the product is exact only below both.
    Rational bound;
    if (a.coeffs_.empty() && b.coeffs_.empty())
        bound = a.order_ + b.order_;
    else if (a.coeffs_.empty())
        bound = a.order_ + b.leading_exponent();
    else if (b.coeffs_.empty())
        bound = b.order_ + a.leading_exponent();
    else
        bound = std::min(a.order_ + b.leading_exponent(),
                         b.order_ + a.leading_exponent());

    PuiseuxSeries s(d, bound);
    std::int64_t cap = floor_num(bound, d);
    for (const auto& [e1, c1] : a.coeffs_) {
        if (!b.coeffs_.empty() && e1 + b.coeffs_.begin()->first > cap)
            break;
        for (const auto& [e2, c2] : b.coeffs_) {
            if (e1 + e2 > cap)
                break;
            s.insert(e1 + e2, c1 * c2);
        }
    }
    return s;
}

PuiseuxSeries PuiseuxSeries::inverse() const {
    if (coeffs_.empty())
        throw DomainError("division by a series with zero leading term");

    const std::int64_t lead = coeffs_.begin()->first;
    const Rational c0 = coeffs_.begin()->second;

    // Support lattice step (in numerator units) relative to the lead term.
    std::int64_t step = 0;
    for (const auto& [e, c] : coeffs_)
        step = std::gcd(step, e - lead);

    // 1/(A + unknown tail) is exact through order - 2*lead.
    Rational out_order = order_ - rat2(2 * lead, denom_);
    PuiseuxSeries s(denom_, out_order);

    if (step == 0) { // single monomial
        s.insert(-lead, Rational(1) / c0);
        return s;
    }

    // b_j determined by sum_{l<=j} a_l b_{j-l} = [j == 0] on the reduced grid.
    std::vector<Rational> av; // a_l at exponent lead + l*step
    {
        std::int64_t max_l = (coeffs_.rbegin()->first - lead) / step;
        av.assign(static_cast<std::size_t>(max_l) + 1, Rational(0));
        for (const auto& [e, c] : coeffs_)
            av[static_cast<std::size_t>((e - lead) / step)] = c;
    }
    // number of grid points of the result below its truncation bound
    Rational span = (out_order - rat2(-lead, denom_)) * rat2(denom_, step);
    mpz_class jmax_z;
    mpz_fdiv_q(jmax_z.get_mpz_t(), span.get_num_mpz_t(), span.get_den_mpz_t());
    std::int64_t jmax = std::max<std::int64_t>(0, jmax_z.get_si());

    std::vector<Rational> bv(static_cast<std::size_t>(jmax) + 1, Rational(0));
    bv[0] = Rational(1) / c0;
    for (std::int64_t j = 1; j <= jmax; ++j) {
        Rational acc(0);
        std::int64_t lmax = std::min<std::int64_t>(j, static_cast<std::int64_t>(av.size()) - 1);
        for (std::int64_t l = 1; l <= lmax; ++l) {
            if (av[static_cast<std::size_t>(l)] == 0)
                continue;
            acc += av[static_cast<std::size_t>(l)] * bv[static_cast<std::size_t>(j - l)];
        }
        bv[static_cast<std::size_t>(j)] = -acc / c0;
    }
    for (std::int64_t j = 0; j <= jmax; ++j)
        s.insert(-lead + j * step, bv[static_cast<std::size_t>(j)]);
    return s;
}

PuiseuxSeries PuiseuxSeries::pow(long e) const {
    if (e < 0)
        return inverse().pow(-e);
    if (e == 0)
        return PuiseuxSeries::constant(Rational(1), order_);
    PuiseuxSeries result = *this;
    for (long i = 1; i < e; ++i)
        result = result * *this;
    return result;
}

PuiseuxSeries div(const PuiseuxSeries& x, const PuiseuxSeries& y) {
    return x * y.inverse();
}

EvalResult PuiseuxSeries::eval(double y) const {
    if (y <= 0.0)
        throw DomainError("evaluation requires y > 0");
    const double two_pi_y = 2.0 * M_PI * y;
    double value = 0.0, abs_sum = 0.0, max_abs_coeff = 1.0;
    for (const auto& [e, c] : coeffs_) {
        double cd = c.get_d();
        double t = cd * std::exp(-two_pi_y * static_cast<double>(e) / static_cast<double>(denom_));
        value += t;
        abs_sum += std::abs(t);
        max_abs_coeff = std::max(max_abs_coeff, std::abs(cd));
    }
    // First-omitted-term estimate with safety 10, scaled by the coefficient
    // magnitude the series has reached, plus float accumulation error.
    double trunc = 10.0 * max_abs_coeff * std::exp(-two_pi_y * order_.get_d());
    double fl = 2.0 * static_cast<double>(coeffs_.size() + 1) * 1.1e-16 * abs_sum;
    return EvalResult{value, trunc + fl};
}

std::string PuiseuxSeries::dump() const {
    std::ostringstream os;
    for (const auto& [e, c] : coeffs_) {
        Rational ex(e, denom_);
        ex.canonicalize();
        os << to_string_frac(ex) << '\t' << to_string_frac(c) << '\n';
    }
    return os.str();
}

bool PuiseuxSeries::agree_up_to_common_order(const PuiseuxSeries& x, const PuiseuxSeries& y) {
    Rational o = std::min(x.order_, y.order_);
    PuiseuxSeries a = x.truncated(o), b = y.truncated(o);
    std::int64_t d = lcm64(a.denom_, b.denom_);
    a = a.with_denom(d);
    b = b.with_denom(d);
    return a.coeffs_ == b.coeffs_;
}

PuiseuxSeries eta_series(long n_terms) {
    if (n_terms < 1)
        throw DomainError("eta series needs at least one product term");
    Rational order = Rational(n_terms) + Rational(1, 24);
    PuiseuxSeries s = PuiseuxSeries::monomial(Rational(1, 24), Rational(1), order);
    for (long n = 1; n <= n_terms; ++n) {
        PuiseuxSeries f = PuiseuxSeries::constant(Rational(1), Rational(n_terms + 1));
        f = f + PuiseuxSeries::monomial(Rational(n), Rational(-1), Rational(n_terms + 1));
        s = s * f;
        s = s.truncated(order);
    }
    return s;
}

PuiseuxSeries theta_rank1_series(long k, long r, long n_terms) {
    if (k < 1)
        throw DomainError("theta requires k >= 1");
    if (r < 0 || r >= 2 * k)
        throw DomainError("theta coset requires 0 <= r < 2k");
    if (n_terms < 1)
        throw DomainError("theta series needs at least one lattice point per side");
    // smallest omitted exponent comes from n = -(n_terms+1); exponents live on
    // (1/(4k))Z so backing off one lattice slot gives an inclusive bound
    std::int64_t m = 2 * k * (n_terms + 1) - r;
    Rational order(m * m - 1, 4 * k);
    order.canonicalize();
    PuiseuxSeries acc = PuiseuxSeries::zero(order);
    for (long n = -n_terms; n <= n_terms; ++n) {
        std::int64_t t = 2 * k * n + r;
        Rational e(t * t, 4 * k);
        e.canonicalize();
        acc = acc + PuiseuxSeries::monomial(e, Rational(1), order);
    }
    return acc;
}

} // namespace mtc

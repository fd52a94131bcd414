#include "mtc/char_expr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

namespace mtc {

namespace {

// Pulls the largest square divisor of sqrt_arg out into coeff (trial division;
// arguments here are small products of scales and 2k factors).
void simplify_sqrt(CharTerm& t) {
    if (t.sqrt_arg <= 0)
        throw DomainError("sqrt prefactor must be positive");
    auto extract = [](mpz_class v, mpz_class& root) {
        root = 1;
        for (mpz_class p = 2; p * p * p * p <= v * v && p <= 1000; ++p) {
            while (v % (p * p) == 0) {
                v /= p * p;
                root *= p;
            }
        }
        return v;
    };
    mpz_class rn, rd;
    mpz_class num = extract(t.sqrt_arg.get_num(), rn);
    mpz_class den = extract(t.sqrt_arg.get_den(), rd);
    t.coeff *= Rational(rn, rd);
    t.coeff.canonicalize();
    t.sqrt_arg = Rational(num, den);
    t.sqrt_arg.canonicalize();
}

// Multiplies the term prefactor by base^{half_units/2}, base > 0.
void mul_half_power(CharTerm& t, const Rational& base, long half_units) {
    long whole = half_units >= 0 ? half_units / 2 : -((-half_units + 1) / 2);
    long rem = half_units - 2 * whole; // 0 or 1
    t.coeff *= rational_pow(base, whole);
    t.coeff.canonicalize();
    if (rem != 0)
        t.sqrt_arg *= base;
    t.sqrt_arg.canonicalize();
    simplify_sqrt(t);
}

Rational theta_min_exponent(long k, long r) {
    long a = r * r, b = (2 * k - r) * (2 * k - r);
    Rational m(std::min(a, b), 4 * k);
    m.canonicalize();
    return m;
}

// Leading exponent of the q-expansion of one product term.
Rational term_lead_exponent(const CharTerm& t) {
    Rational e(0);
    for (const auto& f : t.etas)
        e += Rational(f.power) * f.scale * Rational(1, 24);
    for (const auto& f : t.thetas)
        e += Rational(f.power) * f.scale * theta_min_exponent(f.k, f.r);
    return e;
}

long ceil_to_long(const Rational& r) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q.get_si();
}

std::string factor_key(const std::string& kind, long k, long r, const Rational& scale,
                       long power, const Rational& order) {
    std::ostringstream os;
    os << kind << '|' << k << '|' << r << '|' << scale.get_str() << '|' << power << '|'
       << order.get_str();
    return os.str();
}

std::mutex g_cache_mutex;
std::map<std::string, PuiseuxSeries> g_series_cache;

PuiseuxSeries cached(const std::string& key, const std::function<PuiseuxSeries()>& make) {
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_series_cache.find(key);
        if (it != g_series_cache.end())
            return it->second;
    }
    PuiseuxSeries s = make();
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    g_series_cache.emplace(key, s);
    return s;
}

// eta(scale*tau)^power as a series exact through `order`.
PuiseuxSeries eta_factor_series(const EtaFactor& f, const Rational& order) {
    return cached(factor_key("eta", 0, 0, f.scale, f.power, order), [&] {
        long n = std::max(1l, ceil_to_long(order / f.scale));
        PuiseuxSeries base = eta_series(n).rescaled(f.scale);
        return base.pow(f.power).truncated(order);
    });
}

PuiseuxSeries theta_factor_series(const ThetaFactor& f, const Rational& order) {
    return cached(factor_key("theta", f.k, f.r, f.scale, f.power, order), [&] {
        Rational needed = order / (f.scale * Rational(f.k));
        double need = needed.get_d();
        long n = static_cast<long>(std::sqrt(std::max(1.0, need))) + 2;
        PuiseuxSeries base = theta_rank1_series(f.k, f.r, n).rescaled(f.scale);
        return base.pow(f.power).truncated(order);
    });
}

// Unrescaled base series for factor-wise evaluation: eta(scale*tau) at
// tau = i y is the plain eta series evaluated at scale*y, so the base is
// built in the unscaled variable and only the evaluation point is scaled.
PuiseuxSeries eta_base_series(const Rational& scale, const Rational& order) {
    long n = std::max(1l, ceil_to_long(order / scale));
    return cached(factor_key("etabase", 0, 0, Rational(1), 1, Rational(n)),
                  [&] { return eta_series(n); });
}

PuiseuxSeries theta_base_series(long k, long r, const Rational& scale, const Rational& order) {
    Rational needed = order / (scale * Rational(k));
    long n = static_cast<long>(std::sqrt(std::max(1.0, needed.get_d()))) + 2;
    return cached(factor_key("thetabase", k, r, Rational(1), 1, Rational(n)),
                  [&] { return theta_rank1_series(k, r, n); });
}

std::string expr_key(const CharacterExpr& e, const Rational& order) {
    std::ostringstream os;
    os << "expr|" << order.get_str();
    for (const auto& t : e.terms) {
        os << "|T:" << t.coeff.get_str() << ',' << t.sqrt_arg.get_str() << ','
           << t.tau_power.get_str();
        for (const auto& f : t.etas)
            os << ";e" << f.scale.get_str() << '^' << f.power;
        for (const auto& f : t.thetas)
            os << ";t" << f.k << ',' << f.r << ',' << f.scale.get_str() << '^' << f.power;
    }
    return os.str();
}

bool expandable(const CharacterExpr& e) {
    for (const auto& t : e.terms)
        if (t.sqrt_arg != 1 || t.tau_power != 0)
            return false;
    return true;
}

} // namespace

CharacterExpr char_heisenberg(long d) {
    if (d < 1)
        throw DomainError("rank must be >= 1");
    CharTerm t;
    t.etas.push_back(EtaFactor{Rational(1), -d});
    return CharacterExpr{{t}};
}

CharacterExpr char_heisenberg_twisted(long d) {
    if (d < 1)
        throw DomainError("rank must be >= 1");
    CharTerm t;
    t.etas.push_back(EtaFactor{Rational(1), d});
    t.etas.push_back(EtaFactor{make_rational(1, 2), -d});
    return CharacterExpr{{t}};
}

CharacterExpr char_lattice(long k, long r) {
    if (k < 1)
        throw DomainError("lattice parameter k must be >= 1");
    if (r < 0 || r >= 2 * k)
        throw DomainError("coset requires 0 <= r < 2k");
    CharTerm t;
    t.thetas.push_back(ThetaFactor{k, r, Rational(1), 1});
    t.etas.push_back(EtaFactor{Rational(1), -1});
    return CharacterExpr{{t}};
}

CharacterExpr char_lattice_twisted(long k) {
    if (k < 1)
        throw DomainError("lattice parameter k must be >= 1");
    CharTerm t;
    t.etas.push_back(EtaFactor{Rational(1), 1});
    t.etas.push_back(EtaFactor{make_rational(1, 2), -1});
    return CharacterExpr{{t}};
}

CharacterExpr permutation_twist_char(const CharacterExpr& e, long k) {
    if (k < 1)
        throw DomainError("cycle length must be >= 1");
    CharacterExpr out;
    Rational inv_k = make_rational(1, k);
    for (CharTerm t : e.terms) {
        for (auto& f : t.etas)
            f.scale *= inv_k;
        for (auto& f : t.thetas)
            f.scale *= inv_k;
        if (t.tau_power != 0) {
            // (-i tau/k)^p = k^{-p} (-i tau)^p; p is a multiple of 1/2
            Rational two_p = t.tau_power * 2;
            if (two_p.get_den() != 1)
                throw Unsupported("tau power with denominator > 2");
            mul_half_power(t, Rational(k), -mpz_class(two_p.get_num()).get_si());
        }
        out.terms.push_back(std::move(t));
    }
    return out;
}

CharacterExpr s_transform(const CharacterExpr& e) {
    CharacterExpr out;
    for (const CharTerm& src : e.terms) {
        if (src.tau_power != 0)
            throw Unsupported("s_transform of an already transformed expression");
        CharTerm seed;
        seed.coeff = src.coeff;
        seed.sqrt_arg = src.sqrt_arg;
        long tau_half = 0;

        // eta(s(-1/tau)) = s^{-1/2} (-i tau)^{1/2} eta(tau/s)
        for (const auto& f : src.etas) {
            mul_half_power(seed, f.scale, -f.power);
            seed.etas.push_back(EtaFactor{Rational(1) / f.scale, f.power});
            tau_half += f.power;
        }

        std::vector<CharTerm> branches{seed};
        std::vector<long> branch_tau{tau_half};
        for (const auto& f : src.thetas) {
            if (f.r != 0)
                throw Unsupported("s_transform of a nonzero theta coset");
            if (f.power != 1)
                throw Unsupported("s_transform of a theta power != 1");
            // theta_{k,0}(s(-1/tau)) =
            //   (2k)^{-1/2} s^{-1/2} (-i tau)^{1/2} sum_{r<2k} theta_{k,r}(tau/s)
            std::vector<CharTerm> next;
            std::vector<long> next_tau;
            for (std::size_t b = 0; b < branches.size(); ++b) {
                for (long r = 0; r < 2 * f.k; ++r) {
                    CharTerm t = branches[b];
                    mul_half_power(t, Rational(2 * f.k), -1);
                    mul_half_power(t, f.scale, -1);
                    t.thetas.push_back(ThetaFactor{f.k, r, Rational(1) / f.scale, 1});
                    next.push_back(std::move(t));
                    next_tau.push_back(branch_tau[b] + 1);
                }
            }
            branches = std::move(next);
            branch_tau = std::move(next_tau);
        }

        for (std::size_t b = 0; b < branches.size(); ++b) {
            branches[b].tau_power = Rational(branch_tau[b], 2);
            branches[b].tau_power.canonicalize();
            out.terms.push_back(std::move(branches[b]));
        }
    }
    return out;
}

PuiseuxSeries expr_to_series(const CharacterExpr& e, const Rational& order) {
    if (!expandable(e))
        throw Unsupported("series expansion needs rational prefactors and no tau power");
    return cached(expr_key(e, order), [&] {
        PuiseuxSeries sum = PuiseuxSeries::zero(order);
        for (const auto& t : e.terms) {
            PuiseuxSeries prod = PuiseuxSeries::constant(t.coeff, order);
            for (const auto& f : t.etas)
                prod = (prod * eta_factor_series(f, order)).truncated(order);
            for (const auto& f : t.thetas)
                prod = (prod * theta_factor_series(f, order)).truncated(order);
            sum = sum + prod;
        }
        return sum;
    });
}

EvalResult eval_expr_factorwise(const CharacterExpr& e, double y, const Rational& series_order) {
    if (y <= 0.0)
        throw DomainError("evaluation requires y > 0");
    double value = 0.0, bound = 0.0;
    for (const auto& t : e.terms) {
        double v = t.coeff.get_d() * std::sqrt(t.sqrt_arg.get_d()) *
                   std::pow(y, t.tau_power.get_d());
        double rel = 0.0;
        bool dead = false;
        auto absorb = [&](const EvalResult& er, long power) {
            if (std::abs(er.value) <= er.bound) {
                dead = true; // factor indistinguishable from zero at this order
                return;
            }
            v *= std::pow(er.value, static_cast<double>(power));
            rel += std::abs(static_cast<double>(power)) * er.bound / std::abs(er.value);
        };
        for (const auto& f : t.etas)
            absorb(eta_base_series(f.scale, series_order).eval(f.scale.get_d() * y), f.power);
        for (const auto& f : t.thetas)
            absorb(theta_base_series(f.k, f.r, f.scale, series_order).eval(f.scale.get_d() * y),
                   f.power);
        if (dead)
            return EvalResult{0.0, std::numeric_limits<double>::infinity()};
        value += v;
        bound += std::abs(v) * (rel + 1e-15);
    }
    return EvalResult{value, bound};
}

EvalResult eval_expr(const CharacterExpr& e, double y, const Rational& series_order) {
    if (expandable(e))
        return expr_to_series(e, series_order).eval(y);
    return eval_expr_factorwise(e, y, series_order);
}

namespace {

struct LeadBehavior {
    Rational exponent;   // smallest series exponent across terms
    Rational tau_power;  // largest tau power among terms at that exponent
    double lead_coeff;   // exact coefficient sum of the dominant terms
    Rational gap;        // next exponent above the lead (cross-term), or 1
};

// Leading coefficient of one factor's own q-expansion.
Rational factor_lead_coeff(const ThetaFactor& f) {
    return Rational(f.r == f.k ? 2 : 1);
}

LeadBehavior lead_behavior(const CharacterExpr& e) {
    if (e.terms.empty())
        throw DomainError("empty character expression");
    Rational lead = term_lead_exponent(e.terms.front());
    Rational taup = e.terms.front().tau_power;
    for (const auto& t : e.terms) {
        Rational le = term_lead_exponent(t);
        if (le < lead) {
            lead = le;
            taup = t.tau_power;
        } else if (le == lead) {
            taup = std::max(taup, t.tau_power);
        }
    }
    double lc = 0.0;
    Rational gap(1);
    for (const auto& t : e.terms) {
        Rational le = term_lead_exponent(t);
        if (le == lead && t.tau_power == taup) {
            Rational c = t.coeff;
            for (const auto& f : t.thetas)
                c *= rational_pow(factor_lead_coeff(f), f.power);
            lc += c.get_d() * std::sqrt(t.sqrt_arg.get_d());
        } else if (le > lead) {
            Rational d = le - lead;
            gap = std::min(gap, d);
        }
    }
    return LeadBehavior{lead, taup, lc, gap};
}

QdimLimit transform_limit(const CharacterExpr& char_m, const CharacterExpr& char_v,
                          const QdimLimitOptions& opt) {
    CharacterExpr tm = s_transform(char_m);
    CharacterExpr tv = s_transform(char_v);
    LeadBehavior bm = lead_behavior(tm), bv = lead_behavior(tv);

    if (bm.exponent < bv.exponent)
        return QdimLimit{LimitKind::Divergent, 0.0, 0.0,
                         "numerator grows exponentially faster after transform"};
    if (bm.exponent == bv.exponent && bm.tau_power > bv.tau_power)
        return QdimLimit{LimitKind::Divergent, 0.0, 0.0,
                         "numerator grows polynomially faster after transform"};
    if (bv.lead_coeff == 0.0)
        return QdimLimit{LimitKind::Inconclusive, 0.0, 0.0,
                         "dominant coefficients of the denominator cancel"};

    if (bm.exponent > bv.exponent || bm.tau_power < bv.tau_power)
        return QdimLimit{LimitKind::Finite, 0.0, 0.0,
                         "numerator is subdominant after transform"};

    // Same growth on both sides: the limit is the exact dominant-coefficient
    // ratio. Corrections at finite y die like e^{-2 pi y gap}; pick a probe
    // far enough out to confirm the classification numerically.
    double limit = bm.lead_coeff / bv.lead_coeff;
    double gap = std::min(bm.gap.get_d(), bv.gap.get_d());
    double y = std::max(opt.transform_y, std::log(1e8) / (2.0 * M_PI * gap));
    EvalResult m1 = eval_expr_factorwise(tm, y, opt.transform_order);
    EvalResult v1 = eval_expr_factorwise(tv, y, opt.transform_order);
    if (std::abs(v1.value) <= v1.bound)
        return QdimLimit{LimitKind::Inconclusive, 0.0, 0.0,
                         "transformed denominator vanishes at the probe point"};
    double scale = std::pow(y, bm.tau_power.get_d() - bv.tau_power.get_d());
    double probe = scale * m1.value / v1.value;
    double rel = m1.bound / std::max(std::abs(m1.value), 1e-300) +
                 v1.bound / std::abs(v1.value);
    double err = std::max(1e-12 * (1.0 + std::abs(limit)),
                          std::abs(probe - limit) + std::abs(probe) * rel);
    if (std::abs(probe - limit) > 0.25 * (std::abs(limit) + 1.0))
        return QdimLimit{LimitKind::Inconclusive, probe, err,
                         "numeric probe disagrees with the dominant-term ratio"};
    return QdimLimit{LimitKind::Finite, limit, err,
                     "dominant-coefficient ratio after transform"};
}

QdimLimit raw_limit(const CharacterExpr& char_m, const CharacterExpr& char_v,
                    const QdimLimitOptions& opt) {
    const bool combine = expandable(char_m) && expandable(char_v);
    for (long order : opt.raw_orders) {
        Rational ord(order);
        std::vector<double> usable;
        for (int j = 0; j <= opt.raw_grid_max; ++j) {
            double y = std::ldexp(1.0, -j);
            EvalResult em = combine ? expr_to_series(char_m, ord).eval(y)
                                    : eval_expr_factorwise(char_m, y, ord);
            EvalResult ev = combine ? expr_to_series(char_v, ord).eval(y)
                                    : eval_expr_factorwise(char_v, y, ord);
            if (std::abs(ev.value) <= 2.0 * ev.bound || std::abs(em.value) <= 2.0 * em.bound)
                continue;
            double rel = em.bound / std::abs(em.value) + ev.bound / std::abs(ev.value);
            if (rel > opt.raw_rel_cap)
                continue;
            usable.push_back(em.value / ev.value);
        }
        if (usable.size() >= static_cast<std::size_t>(opt.divergence_run)) {
            bool monotone = true;
            for (std::size_t i = usable.size() - opt.divergence_run + 1; i < usable.size(); ++i)
                monotone = monotone && usable[i] > usable[i - 1];
            if (monotone && usable.back() > opt.divergence_threshold)
                return QdimLimit{LimitKind::Divergent, usable.back(), 0.0,
                                 "monotone growth beyond threshold on the raw grid"};
        }
        if (usable.size() >= 3) {
            double a = usable[usable.size() - 3], b = usable[usable.size() - 2],
                   c = usable.back();
            double spread = std::max({std::abs(a - b), std::abs(a - c), std::abs(b - c)});
            if (spread <= opt.finite_rel_agree * std::abs(c))
                return QdimLimit{LimitKind::Finite, c, spread,
                                 "raw grid ratios stabilized"};
        }
    }
    return QdimLimit{LimitKind::Inconclusive, 0.0, 0.0,
                     "raw grid neither stabilized nor exceeded the divergence gate"};
}

} // namespace

QdimLimit qdim_limit(const CharacterExpr& char_m, const CharacterExpr& char_v,
                     const QdimLimitOptions& opt) {
    if (opt.strategy == LimitStrategy::Transform)
        return transform_limit(char_m, char_v, opt);
    return raw_limit(char_m, char_v, opt);
}

} // namespace mtc

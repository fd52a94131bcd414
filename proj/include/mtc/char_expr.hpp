#pragma once

#include <string>
#include <vector>

#include "mtc/qseries.hpp"

namespace mtc {

// eta(scale * tau)^power
struct EtaFactor {
    Rational scale{1};
    long power = 1;
};

// theta_{k,r}(scale * tau)^power, theta_{k,r}(tau) = sum_n q^{k(n + r/(2k))^2}
struct ThetaFactor {
    long k = 1;
    long r = 0;
    Rational scale{1};
    long power = 1;
};

// One product: coeff * sqrt(sqrt_arg) * (-i tau)^{tau_power} * prod factors.
// Fresh character expressions have sqrt_arg = 1 and tau_power = 0; the
// S-transformation introduces both.
struct CharTerm {
    Rational coeff{1};
    Rational sqrt_arg{1};
    Rational tau_power{0};
    std::vector<EtaFactor> etas;
    std::vector<ThetaFactor> thetas;
};

// Finite sum of product terms; the S-image of a theta factor is stored as an
// explicit sum over dual cosets.
struct CharacterExpr {
    std::vector<CharTerm> terms;
};

// chi_{M(1)} = eta(tau)^{-d} for the rank-d free boson.
CharacterExpr char_heisenberg(long d);
// eta(tau)^d / eta(tau/2)^d, the twisted free-boson character.
CharacterExpr char_heisenberg_twisted(long d);
// theta_{k,r}(tau) / eta(tau).
CharacterExpr char_lattice(long k, long r);
// eta(tau) / eta(tau/2); independent of k and of which twisted module.
CharacterExpr char_lattice_twisted(long k);

// tau -> tau / k (q -> q^{1/k}).
CharacterExpr permutation_twist_char(const CharacterExpr& e, long k);

// tau -> -1/tau. Eta factors follow eta(-1/tau) = (-i tau)^{1/2} eta(tau)
// (with scale bookkeeping); theta factors require r = 0 and power 1 and map
// to (2k)^{-1/2} times the sum over the 2k dual cosets. Throws Unsupported
// for anything else.
CharacterExpr s_transform(const CharacterExpr& e);

// Expands to a single series; requires every term to have a rational
// prefactor and no tau power (true for untransformed characters).
PuiseuxSeries expr_to_series(const CharacterExpr& e, const Rational& order);

// Evaluates at tau = i y. Uses the combined series when the expression is
// expandable (best behaved at small y: character coefficients do not
// cancel); otherwise evaluates factor by factor, with (-i tau)^p -> y^p.
EvalResult eval_expr(const CharacterExpr& e, double y, const Rational& series_order = Rational(100));

// Factor-by-factor evaluation (the only route for transformed expressions).
EvalResult eval_expr_factorwise(const CharacterExpr& e, double y,
                                const Rational& series_order = Rational(100));

enum class LimitKind { Finite, Divergent, Inconclusive };

struct QdimLimit {
    LimitKind kind = LimitKind::Inconclusive;
    double value = 0.0;
    double error = 0.0;
    std::string detail;
};

enum class LimitStrategy { Transform, Raw };

struct QdimLimitOptions {
    LimitStrategy strategy = LimitStrategy::Transform;
    double transform_y = 6.0;          // evaluation point after transforming
    int raw_grid_max = 12;             // y_j = 2^{-j}, j = 0..raw_grid_max
    double divergence_threshold = 1e6; // raw growth gate
    int divergence_run = 5;            // monotone points required
    double finite_rel_agree = 1e-4;    // last-three agreement gate
    double raw_rel_cap = 1e-6;         // max eval error for a usable grid point
    std::vector<long> raw_orders{100, 400, 2000}; // escalating truncation ladder
    Rational transform_order{100};
};

// lim_{y->0} chi_M(iy) / chi_V(iy), by S-transforming both characters and
// reading the leading behavior (default), or by direct evaluation on a
// dyadic y-grid with honest error bounds.
QdimLimit qdim_limit(const CharacterExpr& char_m, const CharacterExpr& char_v,
                     const QdimLimitOptions& opt = {});

} // namespace mtc

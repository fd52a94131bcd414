#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mtc/linalg.hpp"
#include "mtc/rational.hpp"

namespace mtc {

// Labels, distinguished vacuum and complex S-matrix of a rational theory,
// optionally with conformal weights and central charge. Immutable after
// construction; construction checks structure only (squareness, distinct
// labels, vacuum in range), numeric axioms are the job of validate().
struct ModularData {
    std::vector<std::string> labels;
    std::size_t vacuum = 0;
    CMatrix s;
    std::optional<std::vector<Rational>> weights;
    std::optional<Rational> central_charge;
    double axiom_tol = 1e-7;    // symmetry/unitarity/positivity checks
    double rounding_tol = 1e-9; // integrality gates

    ModularData(std::vector<std::string> labels_, std::size_t vacuum_, CMatrix s_);
    ModularData() = default;

    std::size_t size() const { return labels.size(); }
    Complex s_at(std::size_t i, std::size_t j) const { return s.at(i, j); }
    std::size_t label_index(const std::string& name) const;
};

struct Check {
    std::string name;
    double deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ValidationReport {
    std::vector<Check> checks;
    bool pass = false;
    const Check* find(const std::string& name) const;
};

// Symmetry, unitarity, vacuum-row positivity, S^2-is-a-permutation, and the
// weight conventions when weights are present.
ValidationReport validate(const ModularData& md);

// Involutive label permutation M -> M' read off by rounding S^2 to {0,1}.
struct ChargeConjugation {
    std::vector<std::size_t> perm;
    double residual = 0.0;
};

ChargeConjugation charge_conjugation(const ModularData& md);

// Integer structure constants of the fusion ring.
struct FusionTable {
    std::size_t n_labels = 0;
    std::vector<long long> n; // [a][b][c]
    double residual = 0.0;

    long long at(std::size_t a, std::size_t b, std::size_t c) const {
        return n[(a * n_labels + b) * n_labels + c];
    }
    long long& at(std::size_t a, std::size_t b, std::size_t c) {
        return n[(a * n_labels + b) * n_labels + c];
    }
    // F(m) as an integer matrix, rows N, columns W.
    std::vector<long long> fusion_matrix(std::size_t m) const;

    bool is_commutative() const;
    bool has_unit_row(std::size_t vacuum) const;
    bool is_associative() const;
};

// N_{M,N}^W = sum_U S_{N,U} S_{M,U} (S^{-1})_{U,W} / S_{vac,U} with S^{-1}
// taken as the conjugate transpose, rounded to integers under the gate.
FusionTable verlinde_fusion(const ModularData& md);

// S_{m,vac} / S_{vac,vac}; real and positive for valid data.
double quantum_dimension(const ModularData& md, std::size_t m);

struct GlobalDimension {
    double value = 0.0;          // 1 / S_{vac,vac}^2
    double crosscheck_dev = 0.0; // |value - sum of squared quantum dimensions|
};

GlobalDimension global_dimension(const ModularData& md);

struct SimpleCurrent {
    std::size_t label = 0;
    long order = 0;
    double root_of_unity_dev = 0.0; // worst |S_{m,n}/S_{vac,n} - nearest order-th root|
    bool power_rule_ok = false;     // F(m^{box r}) = F(m)^r as integer matrices
};

struct SimpleCurrentReport {
    std::vector<SimpleCurrent> currents;
    bool consistent = true;
    double max_deviation = 0.0;
};

SimpleCurrentReport simple_currents(const ModularData& md, const FusionTable& ft);

struct DiagonalizationCheck {
    double max_off_diag = 0.0;
    double max_diag_dev = 0.0;
    bool pass = false;
    double max() const { return std::max(max_off_diag, max_diag_dev); }
};

// S^{-1} F(m) S should be diag(S_{m,N}/S_{vac,N}).
DiagonalizationCheck fusion_diagonalization_check(const ModularData& md,
                                                  const FusionTable& ft, std::size_t m);

struct QdimClass {
    enum Kind { TwoCosPiOverN, AtLeastTwo, Invalid } kind = Invalid;
    long n = 0; // set for TwoCosPiOverN
};

// Classifies a positive real against {2cos(pi/n) | n >= 3} union [2, inf);
// ties resolved by the smallest n, n_max bounds the search.
QdimClass qdim_classify(double x, double tol, long n_max = 1000);

} // namespace mtc

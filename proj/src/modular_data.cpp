#include "mtc/modular_data.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace mtc {

ModularData::ModularData(std::vector<std::string> labels_, std::size_t vacuum_, CMatrix s_)
    : labels(std::move(labels_)), vacuum(vacuum_), s(std::move(s_)) {
    if (s.n != labels.size() || s.a.size() != s.n * s.n)
        throw StructuralError("S-matrix dimension does not match the label count");
    if (labels.empty())
        throw StructuralError("empty label set");
    if (vacuum >= labels.size())
        throw StructuralError("vacuum index out of range");
    std::set<std::string> uniq(labels.begin(), labels.end());
    if (uniq.size() != labels.size())
        throw StructuralError("labels are not pairwise distinct");
}

std::size_t ModularData::label_index(const std::string& name) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == name)
            return i;
    throw StructuralError("unknown label '" + name + "'");
}

const Check* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

ValidationReport validate(const ModularData& md) {
    const std::size_t n = md.size();
    const double tol = md.axiom_tol;
    ValidationReport rep;

    double sym = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            sym = std::max(sym, std::abs(md.s.at(i, j) - md.s.at(j, i)));
    rep.checks.push_back({"symmetry", sym, tol, sym <= tol});

    double uni = max_abs_diff(md.s * conj_transpose(md.s), CMatrix::identity(n));
    rep.checks.push_back({"unitarity", uni, tol, uni <= tol});

    double pos = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        Complex v = md.s.at(md.vacuum, j);
        pos = std::max(pos, std::abs(v.imag()));
        if (v.real() <= 0.0)
            pos = std::max(pos, 1.0 + std::abs(v.real())); // sign failure dominates
    }
    rep.checks.push_back({"vacuum_row_positive", pos, tol, pos <= tol});

    CMatrix s2 = md.s * md.s;
    double perm_dev = 0.0;
    bool perm_ok = true;
    std::vector<int> row_count(n, 0), col_count(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double d0 = std::abs(s2.at(i, j));
            double d1 = std::abs(s2.at(i, j) - Complex(1.0, 0.0));
            perm_dev = std::max(perm_dev, std::min(d0, d1));
            if (d1 < d0) {
                ++row_count[i];
                ++col_count[j];
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        perm_ok = perm_ok && row_count[i] == 1 && col_count[i] == 1;
    rep.checks.push_back(
        {"s_squared_permutation", perm_dev, tol, perm_ok && perm_dev <= tol});

    if (md.weights) {
        const auto& w = *md.weights;
        double dev = 0.0;
        if (w.size() != n) {
            dev = 1.0;
        } else {
            if (w[md.vacuum] != 0)
                dev = 1.0;
            for (std::size_t i = 0; i < n && dev == 0.0; ++i)
                if (i != md.vacuum && w[i] <= 0)
                    dev = 1.0;
        }
        rep.checks.push_back({"weights_vacuum_zero_rest_positive", dev, 0.0, dev == 0.0});
    }

    rep.pass = true;
    for (const auto& c : rep.checks)
        rep.pass = rep.pass && c.pass;
    return rep;
}

ChargeConjugation charge_conjugation(const ModularData& md) {
    const std::size_t n = md.size();
    CMatrix s2 = md.s * md.s;
    ChargeConjugation cc;
    cc.perm.assign(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double d0 = std::abs(s2.at(i, j));
            double d1 = std::abs(s2.at(i, j) - Complex(1.0, 0.0));
            if (d1 <= md.rounding_tol) {
                if (cc.perm[i] != n)
                    throw NotModularData("S^2 row has two entries rounding to 1");
                cc.perm[i] = j;
                cc.residual = std::max(cc.residual, d1);
            } else if (d0 <= md.rounding_tol) {
                cc.residual = std::max(cc.residual, d0);
            } else {
                std::ostringstream os;
                os << "S^2 entry (" << i << "," << j << ") is " << std::min(d0, d1)
                   << " away from {0,1}";
                throw NotModularData(os.str());
            }
        }
        if (cc.perm[i] == n)
            throw NotModularData("S^2 row rounds to all zeros");
    }
    for (std::size_t i = 0; i < n; ++i)
        if (cc.perm[cc.perm[i]] != i)
            throw NotModularData("charge conjugation is not an involution");
    if (cc.perm[md.vacuum] != md.vacuum)
        throw NotModularData("charge conjugation moves the vacuum");
    return cc;
}

FusionTable verlinde_fusion(const ModularData& md) {
    const std::size_t n = md.size();
    for (std::size_t u = 0; u < n; ++u)
        if (std::abs(md.s.at(md.vacuum, u)) < 1e-14)
            throw NotModularData("vacuum S-row has a zero entry");

    FusionTable ft;
    ft.n_labels = n;
    ft.n.assign(n * n * n, 0);
    for (std::size_t m = 0; m < n; ++m)
        for (std::size_t w = 0; w < n; ++w)
            for (std::size_t nn = m; nn < n; ++nn) {
                Complex acc(0.0, 0.0);
                for (std::size_t u = 0; u < n; ++u) {
                    // (S^{-1})_{U,W} = conj(S_{W,U}) for unitary symmetric S
                    acc += md.s.at(nn, u) * md.s.at(m, u) * std::conj(md.s.at(w, u)) /
                           md.s.at(md.vacuum, u);
                }
                double rounded = std::round(acc.real());
                double dev = std::max(std::abs(acc.real() - rounded), std::abs(acc.imag()));
                ft.residual = std::max(ft.residual, dev);
                if (dev > md.rounding_tol) {
                    std::ostringstream os;
                    os << "fusion multiplicity (" << m << "," << nn << ";" << w
                       << ") fails integrality: residue " << dev;
                    throw NotModularData(os.str());
                }
                if (rounded < 0.0)
                    throw NotModularData("negative fusion multiplicity after rounding");
                long long v = static_cast<long long>(rounded);
                ft.at(m, nn, w) = v;
                ft.at(nn, m, w) = v;
            }

    if (!ft.has_unit_row(md.vacuum))
        throw NotModularData("vacuum fusion row is not the identity");
    if (!ft.is_associative())
        throw NotModularData("fusion table fails associativity");
    return ft;
}

std::vector<long long> FusionTable::fusion_matrix(std::size_t m) const {
    std::vector<long long> f(n_labels * n_labels, 0);
    for (std::size_t b = 0; b < n_labels; ++b)
        for (std::size_t c = 0; c < n_labels; ++c)
            f[b * n_labels + c] = at(m, b, c);
    return f;
}

bool FusionTable::is_commutative() const {
    for (std::size_t a = 0; a < n_labels; ++a)
        for (std::size_t b = 0; b < a; ++b)
            for (std::size_t c = 0; c < n_labels; ++c)
                if (at(a, b, c) != at(b, a, c))
                    return false;
    return true;
}

bool FusionTable::has_unit_row(std::size_t vacuum) const {
    for (std::size_t b = 0; b < n_labels; ++b)
        for (std::size_t c = 0; c < n_labels; ++c)
            if (at(vacuum, b, c) != (b == c ? 1 : 0))
                return false;
    return true;
}

bool FusionTable::is_associative() const {
    for (std::size_t a = 0; a < n_labels; ++a)
        for (std::size_t b = 0; b < n_labels; ++b)
            for (std::size_t c = 0; c < n_labels; ++c)
                for (std::size_t d = 0; d < n_labels; ++d) {
                    long long lhs = 0, rhs = 0;
                    for (std::size_t e = 0; e < n_labels; ++e) {
                        lhs += at(a, b, e) * at(e, c, d);
                        rhs += at(b, c, e) * at(a, e, d);
                    }
                    if (lhs != rhs)
                        return false;
                }
    return true;
}

double quantum_dimension(const ModularData& md, std::size_t m) {
    if (m >= md.size())
        throw StructuralError("label index out of range");
    Complex q = md.s.at(m, md.vacuum) / md.s.at(md.vacuum, md.vacuum);
    if (std::abs(q.imag()) > md.axiom_tol)
        throw NotModularData("quantum dimension has a nonreal value");
    return q.real();
}

GlobalDimension global_dimension(const ModularData& md) {
    double svv = md.s.at(md.vacuum, md.vacuum).real();
    GlobalDimension g;
    g.value = 1.0 / (svv * svv);
    double sum = 0.0;
    for (std::size_t m = 0; m < md.size(); ++m) {
        double q = quantum_dimension(md, m);
        sum += q * q;
    }
    g.crosscheck_dev = std::abs(g.value - sum);
    if (g.crosscheck_dev > 10.0 * md.axiom_tol * std::max(1.0, g.value))
        throw NotModularData("global dimension disagrees with the qdim square sum");
    return g;
}

namespace {

std::vector<long long> int_mat_mul(const std::vector<long long>& x,
                                   const std::vector<long long>& y, std::size_t n) {
    std::vector<long long> z(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            long long v = x[i * n + k];
            if (v == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                z[i * n + j] += v * y[k * n + j];
        }
    return z;
}

} // namespace

SimpleCurrentReport simple_currents(const ModularData& md, const FusionTable& ft) {
    const std::size_t n = md.size();
    SimpleCurrentReport rep;
    for (std::size_t m = 0; m < n; ++m) {
        bool simple = true;
        for (std::size_t b = 0; b < n && simple; ++b) {
            long long row = 0;
            for (std::size_t c = 0; c < n; ++c)
                row += ft.at(m, b, c);
            simple = row == 1;
        }
        if (!simple)
            continue;

        // fusion by m permutes labels; order = orbit length of the vacuum
        std::vector<std::size_t> sigma(n);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (ft.at(m, b, c) == 1)
                    sigma[b] = c;
        long order = 0;
        std::size_t p = md.vacuum;
        do {
            p = sigma[p];
            ++order;
        } while (p != md.vacuum && order <= static_cast<long>(n));

        SimpleCurrent sc;
        sc.label = m;
        sc.order = order;

        for (std::size_t b = 0; b < n; ++b) {
            Complex ratio = md.s.at(m, b) / md.s.at(md.vacuum, b);
            double best = 2.0;
            for (long j = 0; j < order; ++j) {
                Complex root = std::polar(1.0, 2.0 * M_PI * static_cast<double>(j) /
                                                   static_cast<double>(order));
                best = std::min(best, std::abs(ratio - root));
            }
            sc.root_of_unity_dev = std::max(sc.root_of_unity_dev, best);
        }

        sc.power_rule_ok = true;
        std::vector<long long> fm = ft.fusion_matrix(m);
        std::vector<long long> acc = fm;
        std::size_t label_pow = m;
        for (long r = 2; r <= order; ++r) {
            acc = int_mat_mul(acc, fm, n);
            label_pow = sigma[label_pow];
            if (ft.fusion_matrix(label_pow) != acc)
                sc.power_rule_ok = false;
        }

        rep.max_deviation = std::max(rep.max_deviation, sc.root_of_unity_dev);
        if (sc.root_of_unity_dev > md.axiom_tol || !sc.power_rule_ok)
            rep.consistent = false;
        rep.currents.push_back(sc);
    }
    return rep;
}

DiagonalizationCheck fusion_diagonalization_check(const ModularData& md,
                                                  const FusionTable& ft, std::size_t m) {
    const std::size_t n = md.size();
    CMatrix f(n);
    for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
            f.at(b, c) = static_cast<double>(ft.at(m, b, c));
    CMatrix d = conj_transpose(md.s) * f * md.s;

    DiagonalizationCheck chk;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                Complex expect = md.s.at(m, i) / md.s.at(md.vacuum, i);
                chk.max_diag_dev = std::max(chk.max_diag_dev, std::abs(d.at(i, i) - expect));
            } else {
                chk.max_off_diag = std::max(chk.max_off_diag, std::abs(d.at(i, j)));
            }
        }
    chk.pass = chk.max() <= md.axiom_tol;
    return chk;
}

QdimClass qdim_classify(double x, double tol, long n_max) {
    if (x <= 0.0)
        return QdimClass{QdimClass::Invalid, 0};
    for (long n = 3; n <= n_max; ++n) {
        if (std::abs(x - 2.0 * std::cos(M_PI / static_cast<double>(n))) <= tol)
            return QdimClass{QdimClass::TwoCosPiOverN, n};
    }
    if (x >= 2.0 - tol)
        return QdimClass{QdimClass::AtLeastTwo, 0};
    return QdimClass{QdimClass::Invalid, 0};
}

} // namespace mtc

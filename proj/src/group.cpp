#include "mtc/group.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace mtc {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

FiniteGroup FiniteGroup::cyclic(long t) {
    if (t < 1)
        throw DomainError("cyclic group order must be >= 1");
    FiniteGroup g;
    g.kind_ = Kind::Cyclic;
    g.size_ = static_cast<std::size_t>(t);
    g.cyclic_orders_ = {t};
    g.table_.resize(g.size_ * g.size_);
    for (long a = 0; a < t; ++a)
        for (long b = 0; b < t; ++b)
            g.table_[static_cast<std::size_t>(a) * g.size_ + b] =
                static_cast<int>((a + b) % t);
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::product_of_cyclics(const std::vector<long>& orders) {
    if (orders.empty())
        throw DomainError("empty cyclic factor list");
    long m = 1;
    for (long t : orders) {
        if (t < 1)
            throw DomainError("cyclic factor must be >= 1");
        m *= t;
    }
    FiniteGroup g;
    g.kind_ = orders.size() == 1 ? Kind::Cyclic : Kind::ProductOfCyclics;
    g.size_ = static_cast<std::size_t>(m);
    g.cyclic_orders_ = orders;
    g.table_.resize(g.size_ * g.size_);
    for (int a = 0; a < m; ++a) {
        std::vector<long> ta = g.tuple_of(a);
        for (int b = 0; b < m; ++b) {
            std::vector<long> tb = g.tuple_of(b);
            std::vector<long> tc(orders.size());
            for (std::size_t i = 0; i < orders.size(); ++i)
                tc[i] = (ta[i] + tb[i]) % orders[i];
            g.table_[static_cast<std::size_t>(a) * g.size_ + b] = g.index_of_tuple(tc);
        }
    }
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>>& mul) {
    FiniteGroup g;
    g.kind_ = Kind::Table;
    g.size_ = mul.size();
    if (g.size_ == 0)
        throw StructuralError("empty multiplication table");
    g.table_.resize(g.size_ * g.size_);
    for (std::size_t a = 0; a < g.size_; ++a) {
        if (mul[a].size() != g.size_)
            throw StructuralError("multiplication table is not square");
        for (std::size_t b = 0; b < g.size_; ++b) {
            int v = mul[a][b];
            if (v < 0 || static_cast<std::size_t>(v) >= g.size_)
                throw StructuralError("multiplication table entry out of range");
            g.table_[a * g.size_ + b] = v;
        }
    }
    g.finish();
    return g;
}

void FiniteGroup::finish() {
    const int m = order();
    for (int a = 0; a < m; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a)
            throw StructuralError("element 0 is not an identity");
    }
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw StructuralError("multiplication table is not associative");
    inv_.assign(static_cast<std::size_t>(m), -1);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                inv_[static_cast<std::size_t>(a)] = b;
                break;
            }
        if (inv_[static_cast<std::size_t>(a)] < 0)
            throw StructuralError("element without a two-sided inverse");
    }
}

int FiniteGroup::element_order(int a) const {
    int p = a, n = 1;
    while (p != 0) {
        p = mul(p, a);
        ++n;
    }
    return n;
}

bool FiniteGroup::is_abelian() const {
    const int m = order();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < a; ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

std::vector<long> FiniteGroup::tuple_of(int a) const {
    if (cyclic_orders_.empty())
        throw Unsupported("tuple coordinates need a cyclic presentation");
    std::vector<long> t(cyclic_orders_.size());
    long rem = a;
    for (std::size_t i = cyclic_orders_.size(); i-- > 0;) {
        t[i] = rem % cyclic_orders_[i];
        rem /= cyclic_orders_[i];
    }
    return t;
}

int FiniteGroup::index_of_tuple(const std::vector<long>& t) const {
    if (t.size() != cyclic_orders_.size())
        throw StructuralError("tuple rank mismatch");
    long idx = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
        idx = idx * cyclic_orders_[i] + (t[i] % cyclic_orders_[i]);
    return static_cast<int>(idx);
}

TwoCocycle TwoCocycle::trivial(int group_order) {
    TwoCocycle c;
    c.n = 1;
    c.exp.assign(static_cast<std::size_t>(group_order),
                 std::vector<long>(static_cast<std::size_t>(group_order), 0));
    return c;
}

bool TwoCocycle::is_normalized() const {
    for (std::size_t a = 0; a < exp.size(); ++a)
        if (exp[0][a] % n != 0 || exp[a][0] % n != 0)
            return false;
    return true;
}

std::optional<std::array<int, 3>> TwoCocycle::violation(const FiniteGroup& g) const {
    const int m = g.order();
    for (int h = 0; h < m; ++h)
        for (int k = 0; k < m; ++k)
            for (int l = 0; l < m; ++l) {
                long lhs = exp[h][k] + exp[g.mul(h, k)][l];
                long rhs = exp[h][g.mul(k, l)] + exp[k][l];
                if (((lhs - rhs) % n + n) % n != 0)
                    return std::array<int, 3>{h, k, l};
            }
    return std::nullopt;
}

std::complex<double> TwoCocycle::value(int h, int k) const {
    return std::polar(1.0, kTwoPi * static_cast<double>(exp[h][k]) / static_cast<double>(n));
}

CentralExtension central_extension(const FiniteGroup& k, const TwoCocycle& alpha) {
    const int m = k.order();
    if (static_cast<int>(alpha.exp.size()) != m)
        throw StructuralError("cocycle table size does not match the group");
    if (!alpha.is_normalized())
        throw DomainError("cocycle must be normalized");
    if (auto w = alpha.violation(k))
        throw NotACocycle("cocycle identity fails, extension not associative", (*w)[0],
                          (*w)[1], (*w)[2]);

    const long n = alpha.n;
    const int total = static_cast<int>(m * n);
    std::vector<std::vector<int>> mul(static_cast<std::size_t>(total),
                                      std::vector<int>(static_cast<std::size_t>(total)));
    for (int a = 0; a < m; ++a)
        for (long s = 0; s < n; ++s)
            for (int b = 0; b < m; ++b)
                for (long t = 0; t < n; ++t) {
                    int ab = k.mul(a, b);
                    long phase = (s + t + alpha.exp[a][b]) % n;
                    mul[static_cast<std::size_t>(a * n + s)]
                       [static_cast<std::size_t>(b * n + t)] =
                           static_cast<int>(ab * n + phase);
                }
    CentralExtension ext;
    ext.group = FiniteGroup::from_table(mul); // re-validates associativity
    ext.n = n;
    ext.base_order = m;
    return ext;
}

std::complex<double> character_orthogonality(const ProjectiveCharacter& c1,
                                             const ProjectiveCharacter& c2,
                                             const FiniteGroup& k) {
    const int m = k.order();
    if (static_cast<int>(c1.values.size()) != m || static_cast<int>(c2.values.size()) != m)
        throw StructuralError("character length does not match the group order");
    std::complex<double> acc(0.0, 0.0);
    for (int a = 0; a < m; ++a)
        acc += c1.values[a] * std::conj(c2.values[a]);
    return acc / static_cast<double>(m);
}

namespace {

std::vector<ProjectiveCharacter> dual_from_presentation(const FiniteGroup& g) {
    const auto& orders = g.cyclic_orders();
    const int m = g.order();
    std::vector<ProjectiveCharacter> out;
    for (int j = 0; j < m; ++j) {
        std::vector<long> jt = g.tuple_of(j);
        ProjectiveCharacter chi;
        chi.values.resize(static_cast<std::size_t>(m));
        for (int a = 0; a < m; ++a) {
            std::vector<long> at = g.tuple_of(a);
            double angle = 0.0;
            for (std::size_t i = 0; i < orders.size(); ++i)
                angle += kTwoPi * static_cast<double>(jt[i] * at[i]) /
                         static_cast<double>(orders[i]);
            chi.values[static_cast<std::size_t>(a)] = std::polar(1.0, angle);
        }
        out.push_back(std::move(chi));
    }
    return out;
}

std::vector<ProjectiveCharacter> dual_from_table(const FiniteGroup& g) {
    const int m = g.order();
    // greedy generating set + a word for every element
    std::vector<int> gens;
    std::vector<std::vector<long>> word(static_cast<std::size_t>(m));
    std::set<int> reached{0};
    while (static_cast<int>(reached.size()) < m) {
        int pick = -1;
        for (int a = 1; a < m; ++a)
            if (!reached.count(a)) {
                pick = a;
                break;
            }
        gens.push_back(pick);
        // close under multiplication by the new generator
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> snapshot(reached.begin(), reached.end());
            for (int r : snapshot) {
                int p = g.mul(r, pick);
                if (!reached.count(p)) {
                    reached.insert(p);
                    word[static_cast<std::size_t>(p)] = word[static_cast<std::size_t>(r)];
                    word[static_cast<std::size_t>(p)].resize(gens.size(), 0);
                    word[static_cast<std::size_t>(p)].back() += 1;
                    grew = true;
                }
            }
        }
        for (auto& w : word)
            w.resize(gens.size(), 0);
    }

    std::vector<long> gen_orders;
    long candidates = 1;
    for (int a : gens) {
        gen_orders.push_back(g.element_order(a));
        candidates *= gen_orders.back();
        if (candidates > 1000000)
            throw NeedsCharacterTable("dual search space too large for a table group");
    }

    std::vector<ProjectiveCharacter> out;
    for (long code = 0; code < candidates; ++code) {
        std::vector<long> pick(gens.size());
        long rem = code;
        for (std::size_t i = gens.size(); i-- > 0;) {
            pick[i] = rem % gen_orders[i];
            rem /= gen_orders[i];
        }
        ProjectiveCharacter chi;
        chi.values.resize(static_cast<std::size_t>(m));
        for (int a = 0; a < m; ++a) {
            double angle = 0.0;
            for (std::size_t i = 0; i < gens.size(); ++i)
                angle += kTwoPi * static_cast<double>(pick[i] * word[static_cast<std::size_t>(a)][i]) /
                         static_cast<double>(gen_orders[i]);
            chi.values[static_cast<std::size_t>(a)] = std::polar(1.0, angle);
        }
        // keep genuine homomorphisms only (generator relations may cut tuples)
        bool hom = true;
        for (int a = 0; a < m && hom; ++a)
            for (int b = 0; b < m && hom; ++b)
                hom = std::abs(chi.values[static_cast<std::size_t>(g.mul(a, b))] -
                               chi.values[static_cast<std::size_t>(a)] *
                                   chi.values[static_cast<std::size_t>(b)]) < 1e-9;
        if (!hom)
            continue;
        bool dup = false;
        for (const auto& seen : out) {
            double d = 0.0;
            for (int a = 0; a < m; ++a)
                d = std::max(d, std::abs(seen.values[static_cast<std::size_t>(a)] -
                                         chi.values[static_cast<std::size_t>(a)]));
            dup = dup || d < 1e-9;
        }
        if (!dup)
            out.push_back(std::move(chi));
    }
    if (static_cast<int>(out.size()) != m)
        throw NeedsCharacterTable("could not assemble the full dual group from the table");
    return out;
}

} // namespace

std::vector<ProjectiveCharacter> abelian_dual(const FiniteGroup& g) {
    if (!g.is_abelian())
        throw Unsupported("dual group of a nonabelian group");
    if (g.kind() == FiniteGroup::Kind::Table)
        return dual_from_table(g);
    return dual_from_presentation(g);
}

namespace {

void assert_character_set(const FiniteGroup& k, std::vector<ProjectiveCharacter>& chars) {
    long dimsq = 0;
    for (const auto& c : chars)
        dimsq += static_cast<long>(c.dim()) * c.dim();
    if (dimsq != k.order())
        throw BadCharacterTable("character dimensions do not sum to the group order");
    for (std::size_t i = 0; i < chars.size(); ++i)
        for (std::size_t j = 0; j < chars.size(); ++j) {
            std::complex<double> g = character_orthogonality(chars[i], chars[j], k);
            double expect = i == j ? 1.0 : 0.0;
            if (std::abs(g - expect) > 1e-8)
                throw BadCharacterTable("characters are not orthonormal");
        }
}

bool cocycle_is_trivial(const TwoCocycle& a) {
    for (const auto& row : a.exp)
        for (long v : row)
            if (v % a.n != 0)
                return false;
    return true;
}

} // namespace

std::vector<ProjectiveCharacter> projective_irreducibles(
    const FiniteGroup& k, const TwoCocycle& alpha,
    const std::vector<ProjectiveCharacter>* extension_table) {
    std::vector<ProjectiveCharacter> out;

    if (extension_table != nullptr) {
        // rows of the extension table on which kappa acts as e^{2 pi i / n}
        CentralExtension ext = central_extension(k, alpha);
        const int kappa = ext.index(0, alpha.n > 1 ? 1 : 0);
        std::complex<double> want =
            std::polar(1.0, kTwoPi / static_cast<double>(alpha.n));
        for (const auto& row : *extension_table) {
            if (static_cast<int>(row.values.size()) != ext.group.order())
                throw BadCharacterTable("extension table row has the wrong length");
            std::complex<double> dim = row.values[0];
            if (std::abs(row.values[static_cast<std::size_t>(kappa)] - want * dim) > 1e-8)
                continue;
            ProjectiveCharacter chi;
            chi.values.resize(static_cast<std::size_t>(k.order()));
            for (int a = 0; a < k.order(); ++a)
                chi.values[static_cast<std::size_t>(a)] =
                    row.values[static_cast<std::size_t>(ext.index(a, 0))];
            out.push_back(std::move(chi));
        }
    } else if (cocycle_is_trivial(alpha)) {
        out = abelian_dual(k); // throws Unsupported for nonabelian groups
    } else if (k.kind() == FiniteGroup::Kind::Cyclic) {
        // Projective representations of a cyclic group are ordinary: split off
        // the coboundary beta(g^j) = prod_{i<j} alpha(g, g^i). The twisted
        // algebra is C[x]/(x^T - c) with c = beta(g^T), so its characters are
        // chi_m(g^j) = (c^{1/T} e^{2 pi i m/T})^j / beta(g^j).
        const long t = k.order();
        std::vector<std::complex<double>> beta(static_cast<std::size_t>(t + 1),
                                               std::complex<double>(1.0, 0.0));
        for (long j = 1; j <= t; ++j)
            beta[static_cast<std::size_t>(j)] =
                beta[static_cast<std::size_t>(j - 1)] *
                alpha.value(1, static_cast<int>((j - 1) % t));
        std::complex<double> c = beta[static_cast<std::size_t>(t)];
        double base_angle = std::arg(c) / static_cast<double>(t);
        for (long m = 0; m < t; ++m) {
            ProjectiveCharacter chi;
            chi.values.resize(static_cast<std::size_t>(t));
            for (long j = 0; j < t; ++j) {
                std::complex<double> zeta =
                    std::polar(1.0, base_angle + kTwoPi * static_cast<double>(m) /
                                                     static_cast<double>(t));
                chi.values[static_cast<std::size_t>(j)] =
                    std::pow(zeta, static_cast<double>(j)) / beta[static_cast<std::size_t>(j)];
            }
            out.push_back(std::move(chi));
        }
    } else {
        throw NeedsCharacterTable(
            "nonabelian or non-cyclic twisted case requires the extension character table");
    }

    assert_character_set(k, out);
    return out;
}

TwistedSectorAlgebra TwistedSectorAlgebra::trivial(const FiniteGroup& g,
                                                   const std::vector<std::vector<int>>& action) {
    TwistedSectorAlgebra spec;
    spec.group = g;
    spec.module_count = static_cast<int>(action.size());
    spec.action = action;
    spec.root_order = 1;
    spec.alpha_exp.assign(
        action.size(),
        std::vector<std::vector<long>>(static_cast<std::size_t>(g.order()),
                                       std::vector<long>(static_cast<std::size_t>(g.order()), 0)));
    return spec;
}

std::optional<FamilyViolation> validate_twisted_sector_algebra(const TwistedSectorAlgebra& spec) {
    const int m = spec.group.order();
    if (static_cast<int>(spec.action.size()) != spec.module_count ||
        static_cast<int>(spec.alpha_exp.size()) != spec.module_count)
        throw StructuralError("module count does not match the action/cocycle tables");
    for (int s = 0; s < spec.module_count; ++s) {
        if (static_cast<int>(spec.action[s].size()) != m)
            throw StructuralError("action row has the wrong length");
        if (spec.action[s][0] != s)
            throw StructuralError("action by the identity moves a module");
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                if (spec.action[static_cast<std::size_t>(spec.action[s][a])][b] !=
                    spec.action[s][spec.group.mul(a, b)])
                    throw StructuralError("module action is not a right action");
    }
    // Associativity of the product is equivalent to this relation on the
    // cocycle family, with N = P . c^{-1}:
    //   alpha_N(a,b) alpha_P(ab,c) = alpha_P(b,c) alpha_P(a,bc)
    const long n = spec.root_order;
    for (int p = 0; p < spec.module_count; ++p)
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c) {
                    int nn = spec.action[p][spec.group.inverse(c)];
                    long lhs = spec.alpha_exp[static_cast<std::size_t>(nn)][a][b] +
                               spec.alpha_exp[p][spec.group.mul(a, b)][c];
                    long rhs = spec.alpha_exp[p][b][c] +
                               spec.alpha_exp[p][a][spec.group.mul(b, c)];
                    if (((lhs - rhs) % n + n) % n != 0)
                        return FamilyViolation{p, a, b, c};
                }
    return std::nullopt;
}

SectorProduct a_alpha_multiply(const TwistedSectorAlgebra& spec, const SectorBasisElement& x,
                               const SectorBasisElement& y) {
    SectorProduct out;
    if (spec.action[static_cast<std::size_t>(x.m)][y.g] != y.m)
        return out; // e(M . b) e(N) = 0
    out.zero = false;
    out.coeff = std::polar(1.0, kTwoPi *
                                    static_cast<double>(
                                        spec.alpha_exp[static_cast<std::size_t>(y.m)][x.g][y.g]) /
                                    static_cast<double>(spec.root_order));
    out.elem = SectorBasisElement{spec.group.mul(x.g, y.g), y.m};
    return out;
}

int stabilizer_order(const TwistedSectorAlgebra& spec, int m) {
    int count = 0;
    for (int g = 0; g < spec.group.order(); ++g)
        if (spec.action[static_cast<std::size_t>(m)][g] == m)
            ++count;
    return count;
}

long induced_dimension(const TwistedSectorAlgebra& spec, int m, long dim_w) {
    return (spec.group.order() / stabilizer_order(spec, m)) * dim_w;
}

} // namespace mtc

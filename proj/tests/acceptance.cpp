// Acceptance suite: one line per criterion, exit 0 iff everything passes.
// Each criterion pins its tolerance in code; nothing is deferred.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "mtc/drinfeld_double.hpp"
#include "mtc/json_io.hpp"
#include "mtc/models.hpp"
#include "s3_fixture.hpp"

using namespace mtc;

namespace {

int g_failures = 0;

void report(int idx, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("criterion %d: %-34s %s%s\n", idx, name.c_str(), pass ? "PASS" : "FAIL",
                detail.empty() ? "" : ("  [" + detail + "]").c_str());
    if (!pass)
        ++g_failures;
}

ModularData relabeled(const ModularData& md, std::mt19937& rng) {
    std::vector<std::size_t> p(md.size());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<std::string> labels(md.size());
    CMatrix s(md.size());
    for (std::size_t i = 0; i < md.size(); ++i) {
        labels[p[i]] = md.labels[i];
        for (std::size_t j = 0; j < md.size(); ++j)
            s.at(p[i], p[j]) = md.s.at(i, j);
    }
    return ModularData(labels, p[md.vacuum], s);
}

// 1. lattice quantum dimensions: S-matrix vs character limits
void criterion1() {
    bool pass = true;
    std::ostringstream detail;
    for (long k = 1; k <= 4 && pass; ++k) {
        ModelBundle b = lattice_rank1(k);
        const ModularData& md = b.modular_data();
        for (std::size_t r = 0; r < md.size(); ++r)
            pass = pass && std::abs(quantum_dimension(md, r) - 1.0) <= 1e-9;

        QdimLimitOptions raw;
        raw.strategy = LimitStrategy::Raw;
        for (std::size_t r = 0; r < md.size() && pass; ++r) {
            QdimLimit lim =
                qdim_limit(b.characters.at(md.labels[r]), b.characters.at(md.labels[0]), raw);
            pass = lim.kind == LimitKind::Finite && std::abs(lim.value - 1.0) <= 1e-4;
            if (!pass)
                detail << "k=" << k << " r=" << r << " raw limit off";
        }

        QdimLimit tw = qdim_limit(b.characters.at("T0"), b.characters.at("r0"));
        bool ok = tw.kind == LimitKind::Finite &&
                  std::abs(tw.value - std::sqrt(static_cast<double>(k))) <= 1e-6;
        if (!ok)
            detail << "k=" << k << " twisted transform limit off";
        pass = pass && ok;
    }
    report(1, "lattice quantum dimensions", pass, detail.str());
}

// 2. global dimension and the twisted-sector square identity
void criterion2() {
    bool pass = true;
    std::ostringstream detail;
    for (long k = 1; k <= 4; ++k) {
        ModelBundle b = lattice_rank1(k);
        double glob = global_dimension(b.modular_data()).value;
        if (std::abs(glob - 2.0 * k) > 1e-9) {
            pass = false;
            detail << "glob(k=" << k << ")=" << glob;
        }
        SectorIdentity si = sector_identity(b.modular_data(), *b.descriptor, 1, 1e-9);
        if (!si.pass || std::abs(si.sum - 2.0 * k) > 1e-9) {
            pass = false;
            detail << " sector sum k=" << k;
        }
    }
    report(2, "global dimensions", pass, detail.str());
}

// 3. orbifold identity suite on every bundled fixture
void criterion3() {
    bool pass = true;
    std::ostringstream detail;
    auto run = [&](const ModelBundle& b) {
        const ModularData& md = b.modular_data();
        IdentityReport rep = glob_identities(md, *b.descriptor, 1e-7);
        if (!rep.pass) {
            pass = false;
            detail << b.name << " glob identities;";
        }
        for (int g = 0; g < b.descriptor->group.order(); ++g)
            if (!counting_check(md, *b.descriptor, g).pass) {
                pass = false;
                detail << b.name << " counting g=" << g << ";";
            }
        for (int g = 0; g < b.descriptor->group.order(); ++g)
            if (!sector_identity(md, *b.descriptor, g, 1e-7).pass) {
                pass = false;
                detail << b.name << " sector identity g=" << g << ";";
            }
        for (const auto& s : sector_sum_check(md, *b.descriptor, 1e-7))
            if (!s.pass) {
                pass = false;
                detail << b.name << " sector sum r=" << s.r << ";";
            }
    };
    for (long k = 1; k <= 4; ++k) {
        ModelBundle b = lattice_rank1(k);
        run(b);
        std::size_t count = derive(b.modular_data(), *b.descriptor).irreps.size();
        if (count != static_cast<std::size_t>(k + 7)) {
            pass = false;
            detail << "k=" << k << " count=" << count << "!=" << (k + 7) << ";";
        }
    }
    for (long t = 1; t <= 6; ++t)
        run(holomorphic_cyclic(t));
    report(3, "orbifold identity suite", pass, detail.str());
}

// 4. sector masses for all T <= 64
void criterion4() {
    bool pass = true;
    std::ostringstream detail;
    for (long t = 1; t <= 64; ++t) {
        SectorMassSolution s = sector_mass_solve(t);
        if (s.max_dev_from_uniform > 1e-12 || s.residual > 1e-12) {
            pass = false;
            detail << "T=" << t << " dev=" << s.max_dev_from_uniform;
            break;
        }
    }
    report(4, "sector masses", pass, detail.str());
}

// 5. free-boson divergence at default settings
void criterion5() {
    bool pass = true;
    std::ostringstream detail;
    for (long d = 1; d <= 3; ++d) {
        ModelBundle h = heisenberg(d);
        QdimLimit lim = qdim_limit(h.characters.at("M(1)(theta)"), h.characters.at("M(1)"));
        if (lim.kind != LimitKind::Divergent) {
            pass = false;
            detail << "d=" << d << " not divergent;";
        }
    }
    report(5, "free-boson divergence", pass, detail.str());
}

// 6. fusion integrality on bundles and 100 random relabelings
void criterion6() {
    bool pass = true;
    std::ostringstream detail;
    std::vector<ModularData> bundled;
    for (long k = 1; k <= 4; ++k)
        bundled.push_back(lattice_rank1(k).modular_data());
    for (long t = 1; t <= 6; ++t)
        bundled.push_back(holomorphic_cyclic(t).modular_data());
    bundled.push_back(tensor_power(lattice_rank1(1).modular_data(), 2).modular_data());

    auto check_one = [&](const ModularData& md, const std::string& tag) {
        try {
            FusionTable ft = verlinde_fusion(md);
            bool ok = ft.residual < 1e-9 && ft.is_commutative() &&
                      ft.has_unit_row(md.vacuum) && ft.is_associative();
            if (!ok) {
                pass = false;
                detail << tag << " invariants;";
            }
        } catch (const Error& e) {
            pass = false;
            detail << tag << " threw;";
        }
    };
    for (std::size_t i = 0; i < bundled.size(); ++i)
        check_one(bundled[i], "bundle" + std::to_string(i));
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 100; ++trial) {
        const ModularData& base = bundled[trial % bundled.size()];
        check_one(relabeled(base, rng), "relabel" + std::to_string(trial));
    }
    report(6, "fusion integrality", pass, detail.str());
}

// 7. doubles of cyclic groups and the S_3 fusion rule
void criterion7() {
    bool pass = true;
    std::ostringstream detail;
    for (long t = 1; t <= 6; ++t) {
        FiniteGroup g = FiniteGroup::cyclic(t);
        auto irreps = dg_irreps(g);
        if (irreps.size() != static_cast<std::size_t>(t * t)) {
            pass = false;
            detail << "T=" << t << " count;";
        }
        // fusion must be the componentwise group law of Z_T x Z_T
        for (const auto& a : irreps)
            for (const auto& b : irreps) {
                DoubleIrrep want{static_cast<int>((a.character + b.character) % t),
                                 g.mul(a.sector, b.sector)};
                if (!(dg_tensor(a, b, g) == want)) {
                    pass = false;
                    detail << "T=" << t << " group law;";
                }
            }
        BialgebraReport rep = dg_bialgebra_checks(g);
        if (!rep.pass()) {
            pass = false;
            detail << "T=" << t << " bialgebra;";
        }
    }
    S3Fixture s3 = make_s3_fixture();
    std::vector<long> m = untwisted_fusion(s3.table, s3.group, s3.std_, s3.std_);
    if (m != std::vector<long>{1, 1, 1}) {
        pass = false;
        detail << "S_3 std x std;";
    }
    report(7, "double of cyclic groups", pass, detail.str());
}

// 8. permutation orbifold square sums
void criterion8() {
    bool pass = true;
    std::ostringstream detail;
    ModularData md = lattice_rank1(1).modular_data();
    for (long k = 2; k <= 4; ++k) {
        PermutationOrbifoldQdims p = permutation_orbifold_qdims(md, k, 1e-9);
        double expect = std::pow(2.0, static_cast<double>(k));
        if (!p.pass || std::abs(p.sum_of_squares - expect) > 1e-9) {
            pass = false;
            detail << "k=" << k << " sum=" << p.sum_of_squares << ";";
        }
    }
    report(8, "permutation orbifold", pass, detail.str());
}

// 9. twisted group algebra orthogonality
void criterion9() {
    bool pass = true;
    std::ostringstream detail;
    for (long n = 1; n <= 8; ++n) {
        FiniteGroup g = FiniteGroup::cyclic(n);
        auto chars = projective_irreducibles(g, TwoCocycle::trivial(static_cast<int>(n)));
        for (std::size_t i = 0; i < chars.size(); ++i)
            for (std::size_t j = 0; j < chars.size(); ++j) {
                std::complex<double> v = character_orthogonality(chars[i], chars[j], g);
                double want = i == j ? 1.0 : 0.0;
                if (std::abs(v - want) > 1e-10) {
                    pass = false;
                    detail << "Z_" << n << " gram;";
                }
            }
    }

    FiniteGroup k22 = FiniteGroup::product_of_cyclics({2, 2});
    TwoCocycle pauli;
    pauli.n = 2;
    pauli.exp.assign(4, std::vector<long>(4, 0));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            pauli.exp[i][j] = (k22.tuple_of(i)[1] * k22.tuple_of(j)[0]) % 2;
    CentralExtension ext = central_extension(k22, pauli);
    std::vector<ProjectiveCharacter> table;
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            ProjectiveCharacter row;
            row.values.resize(8);
            for (int a = 0; a < 4; ++a)
                for (long s = 0; s < 2; ++s)
                    row.values[static_cast<std::size_t>(ext.index(a, s))] =
                        ((p * k22.tuple_of(a)[0] + q * k22.tuple_of(a)[1]) % 2 == 0) ? 1.0
                                                                                     : -1.0;
            table.push_back(row);
        }
    ProjectiveCharacter dim2;
    dim2.values.assign(8, 0.0);
    dim2.values[static_cast<std::size_t>(ext.index(0, 0))] = 2.0;
    dim2.values[static_cast<std::size_t>(ext.index(0, 1))] = -2.0;
    table.push_back(dim2);

    auto chars = projective_irreducibles(k22, pauli, &table);
    if (chars.size() != 1 || chars[0].dim() != 2) {
        pass = false;
        detail << "pauli irreducible;";
    } else {
        long dimsq = 0;
        for (const auto& c : chars)
            dimsq += static_cast<long>(c.dim()) * c.dim();
        if (dimsq != 4) {
            pass = false;
            detail << "pauli dim count;";
        }
        std::complex<double> gram = character_orthogonality(chars[0], chars[0], k22);
        if (std::abs(gram - 1.0) > 1e-10) {
            pass = false;
            detail << "pauli gram;";
        }
    }
    report(9, "twisted algebra orthogonality", pass, detail.str());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}

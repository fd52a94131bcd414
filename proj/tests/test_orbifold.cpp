#include "doctest.h"

#include <cmath>
#include <map>

#include "mtc/models.hpp"
#include "mtc/orbifold.hpp"

using namespace mtc;

namespace {

// 4x4 fixed-point S-matrix used as external input for the ratio check.
ModularData toric_code_md() {
    CMatrix s(4);
    double h = 0.5;
    double vals[4][4] = {{h, h, h, h}, {h, h, -h, -h}, {h, -h, h, -h}, {h, -h, -h, h}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            s.at(i, j) = vals[i][j];
    return ModularData({"1", "e", "m", "f"}, 0, s);
}

} // namespace

TEST_CASE("descriptor validation catches each broken invariant") {
    ModelBundle b = lattice_rank1(2);
    const ModularData& md = b.modular_data();

    CHECK(validate_descriptor(md, *b.descriptor).pass);

    SUBCASE("wrong stabilizer dims") {
        OrbifoldDescriptor d = *b.descriptor;
        d.orbits[0].irrep_dims = {1, 2};
        DescriptorReport rep = validate_descriptor(md, d);
        CHECK(!rep.pass);
        CHECK_THROWS_AS(derive(md, d), InvalidDescriptor);
        try {
            derive(md, d);
        } catch (const InvalidDescriptor& e) {
            CHECK(e.invariant == "orbit_dims_square_sum");
        }
    }

    SUBCASE("orbit size mismatch") {
        OrbifoldDescriptor d = *b.descriptor;
        d.sectors[0][1].orbit = 0; // r1 claimed to sit in the fixed orbit of r0
        CHECK(!validate_descriptor(md, d).pass);
    }

    SUBCASE("action must fix the vacuum") {
        OrbifoldDescriptor d = *b.descriptor;
        d.action_on_untwisted[1] = {1, 0, 2, 3};
        DescriptorReport rep = validate_descriptor(md, d);
        bool found = false;
        for (const auto& c : rep.checks)
            if (c.invariant == "action_fixes_vacuum") {
                found = true;
                CHECK(!c.pass);
            }
        CHECK(found);
    }

    SUBCASE("nonpositive qdim") {
        OrbifoldDescriptor d = *b.descriptor;
        d.sectors[1][0].qdim = -1.0;
        CHECK(!validate_descriptor(md, d).pass);
    }

    SUBCASE("identity sector must carry the S-matrix dimensions") {
        OrbifoldDescriptor d = *b.descriptor;
        d.sectors[0][2].qdim = 3.0;
        DescriptorReport rep = validate_descriptor(md, d);
        CHECK(!rep.pass);
    }
}

TEST_CASE("trivial group: derived data reduces to the input theory") {
    ModelBundle b = holomorphic_cyclic(1);
    DerivedOrbifoldData derived = derive(b.modular_data(), *b.descriptor);
    REQUIRE(derived.irreps.size() == 1);
    CHECK(derived.irreps[0].qdim_vg == doctest::Approx(1.0));
    CHECK(derived.glob_vg == doctest::Approx(1.0));

    WholeModuleQdim w = whole_module_qdim(b.modular_data(), *b.descriptor, 0);
    CHECK(w.value == doctest::Approx(1.0));
    CHECK(w.pass);

    // T=1 ratio check: the single ratio is 1
    auto ratios = sector_ratio_check(b.modular_data(), "V", {{"V", 0}}, 1);
    REQUIRE(ratios.size() == 1);
    CHECK(ratios[0].pass);
    CHECK(ratios[0].ratio.real() == doctest::Approx(1.0));
}

TEST_CASE("lattice involution orbifold: full census") {
    for (long k : {1L, 2L, 3L, 4L}) {
        ModelBundle b = lattice_rank1(k);
        const ModularData& md = b.modular_data();
        DerivedOrbifoldData derived = derive(md, *b.descriptor);

        // hand enumeration: 2+2 fixed untwisted of qdim 1, k-1 paired orbits
        // of qdim 2, four twisted of qdim sqrt k
        CHECK(derived.irreps.size() == static_cast<std::size_t>(k + 7));
        std::map<int, int> by_qdim; // rounded 100*qdim -> count
        for (const auto& ir : derived.irreps)
            ++by_qdim[static_cast<int>(std::lround(100.0 * ir.qdim_vg))];
        std::map<int, int> expect;
        expect[100] += 4;                                                  // fixed untwisted
        expect[static_cast<int>(std::lround(200.0))] += static_cast<int>(k - 1); // pairs
        expect[static_cast<int>(std::lround(100.0 * std::sqrt(double(k))))] += 4; // twisted
        for (auto it = expect.begin(); it != expect.end();)
            it = it->second == 0 ? expect.erase(it) : std::next(it);
        CHECK(by_qdim == expect);
        CHECK(derived.glob_vg == doctest::Approx(8.0 * k));

        // S_{M_lambda,V^G} = qdim_vg * S_{V^G,V^G} for every derived irrep
        for (const auto& ir : derived.irreps)
            CHECK(ir.s_with_vg_vacuum.real() ==
                  doctest::Approx(ir.qdim_vg * derived.s_vg_vacuum).epsilon(1e-10));
    }
}

TEST_CASE("whole-module qdim and the exact integer identity behind it") {
    ModelBundle b = lattice_rank1(2);
    const ModularData& md = b.modular_data();
    // twisted orbit: |G| sqrt(k) = 2 sqrt 2
    WholeModuleQdim w = whole_module_qdim(md, *b.descriptor, 3); // T0 orbit id = k+1
    CHECK(w.value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(w.pass);

    // sum_lambda d_lambda ([G:G_M] d_lambda) = |G| exactly, per orbit
    for (const auto& o : b.descriptor->orbits) {
        long g = b.descriptor->group.order();
        long acc = 0;
        for (int dl : o.irrep_dims)
            acc += static_cast<long>(dl) * (g / o.stabilizer_order) * dl;
        CHECK(acc == g);
    }

    ModelBundle h3 = holomorphic_cyclic(3);
    WholeModuleQdim w3 = whole_module_qdim(h3.modular_data(), *h3.descriptor, 1);
    CHECK(w3.value == doctest::Approx(3.0));
    CHECK(w3.pass);
}

TEST_CASE("counting checks") {
    for (long k : {1L, 2L, 3L}) {
        ModelBundle b = lattice_rank1(k);
        CountingCheck ident = counting_check(b.modular_data(), *b.descriptor, 0);
        CHECK(ident.twisted_count == 2 * k);
        CHECK(ident.pass);
        CountingCheck tw = counting_check(b.modular_data(), *b.descriptor, 1);
        CHECK(tw.twisted_count == 2);
        CHECK(tw.stable_count == 2); // r = 0 and r = k
        CHECK(tw.pass);
    }
    for (long t : {2L, 5L}) {
        ModelBundle b = holomorphic_cyclic(t);
        for (int g = 0; g < t; ++g)
            CHECK(counting_check(b.modular_data(), *b.descriptor, g).pass);
    }
}

TEST_CASE("global-dimension identity suite") {
    for (long k : {1L, 2L, 3L, 4L}) {
        ModelBundle b = lattice_rank1(k);
        IdentityReport rep = glob_identities(b.modular_data(), *b.descriptor);
        CHECK(rep.pass);
        for (const auto& c : rep.checks)
            CHECK(c.deviation <= 1e-7 * std::max(1.0, std::abs(c.rhs)));
        // spot numbers for k=2: glob_vg = 16 = 4*1 + 1*4 + 4*2
        if (k == 2) {
            CHECK(rep.checks[0].lhs == doctest::Approx(16.0));
            CHECK(rep.checks[3].rhs == doctest::Approx(16.0));
        }
    }
    for (long t : {1L, 2L, 3L, 4L, 5L, 6L}) {
        ModelBundle b = holomorphic_cyclic(t);
        IdentityReport rep = glob_identities(b.modular_data(), *b.descriptor);
        CHECK(rep.pass);
        CHECK(rep.checks[0].lhs == doctest::Approx(static_cast<double>(t * t)));
    }
}

TEST_CASE("sector identities (cyclic)") {
    for (long k : {1L, 2L, 3L, 4L}) {
        ModelBundle b = lattice_rank1(k);
        SectorIdentity unt = sector_identity(b.modular_data(), *b.descriptor, 0);
        CHECK(unt.pass); // sum over V-modules is glob by definition
        SectorIdentity tw = sector_identity(b.modular_data(), *b.descriptor, 1);
        CHECK(tw.sum == doctest::Approx(2.0 * k)); // k + k
        CHECK(tw.glob == doctest::Approx(2.0 * k));
        CHECK(tw.pass);
    }
    ModelBundle h = holomorphic_cyclic(4);
    for (int g = 0; g < 4; ++g) {
        SectorIdentity si = sector_identity(h.modular_data(), *h.descriptor, g);
        CHECK(si.sum == doctest::Approx(1.0));
        CHECK(si.pass);
    }
}

TEST_CASE("sector masses solve to the uniform vector") {
    SectorMassSolution s1 = sector_mass_solve(1);
    CHECK(s1.x == std::vector<double>{1.0});
    for (long t : {5L, 12L, 64L}) {
        SectorMassSolution s = sector_mass_solve(t);
        REQUIRE(s.x.size() == static_cast<std::size_t>(t));
        for (double v : s.x)
            CHECK(std::abs(v - 1.0 / static_cast<double>(t)) <= 1e-12);
        CHECK(s.max_dev_from_uniform <= 1e-12);
        CHECK(s.residual <= 1e-12);
    }
}

TEST_CASE("per-sector derived sums") {
    // holomorphic T=4: each sector sums to 4 = 16/4
    ModelBundle h = holomorphic_cyclic(4);
    auto sums = sector_sum_check(h.modular_data(), *h.descriptor);
    REQUIRE(sums.size() == 4);
    for (const auto& s : sums) {
        CHECK(s.sum == doctest::Approx(4.0));
        CHECK(s.pass);
    }

    // lattice k=2: untwisted 1+1+1+1+4 = 8, twisted 2+2+2+2 = 8
    ModelBundle b = lattice_rank1(2);
    auto ls = sector_sum_check(b.modular_data(), *b.descriptor);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0].sum == doctest::Approx(8.0));
    CHECK(ls[1].sum == doctest::Approx(8.0));
    CHECK(ls[0].pass);
    CHECK(ls[1].pass);

    // T=1: the whole sum is glob
    ModelBundle h1 = holomorphic_cyclic(1);
    auto one = sector_sum_check(h1.modular_data(), *h1.descriptor);
    REQUIRE(one.size() == 1);
    CHECK(one[0].sum == doctest::Approx(1.0));
}

TEST_CASE("sector ratio check against external fixed-point data") {
    ModularData md = toric_code_md();
    REQUIRE(validate(md).pass);
    std::map<std::string, long> sector{{"1", 0}, {"e", 0}, {"m", 1}, {"f", 1}};

    auto ratios = sector_ratio_check(md, "e", sector, 2);
    REQUIRE(ratios.size() == 4);
    for (const auto& r : ratios) {
        CHECK(r.pass);
        double want = sector[r.label] == 0 ? 1.0 : -1.0;
        CHECK(r.ratio.real() == doctest::Approx(want));
    }

    // permuted sector labels must fail with a witness
    std::map<std::string, long> wrong{{"1", 0}, {"e", 1}, {"m", 1}, {"f", 1}};
    auto bad = sector_ratio_check(md, "e", wrong, 2);
    bool any_fail = false;
    for (const auto& r : bad)
        any_fail = any_fail || !r.pass;
    CHECK(any_fail);

    CHECK_THROWS_AS(sector_ratio_check(md, "", sector, 2), Unsupported);
}

TEST_CASE("permutation orbifold quantum dimensions") {
    ModelBundle b = lattice_rank1(1);
    const ModularData& md = b.modular_data();

    PermutationOrbifoldQdims k1 = permutation_orbifold_qdims(md, 1);
    CHECK(k1.qdims[0] == doctest::Approx(1.0));
    CHECK(k1.qdims[1] == doctest::Approx(1.0));
    CHECK(k1.pass);

    // cycle length 3: each qdim is (sqrt 2)^2 = 2, square sum 8 = glob^3
    PermutationOrbifoldQdims k3 = permutation_orbifold_qdims(md, 3);
    CHECK(k3.qdims[0] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(k3.qdims[1] == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(k3.sum_of_squares == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(k3.glob_power == doctest::Approx(8.0));
    CHECK(k3.pass);
}

TEST_CASE("non-cyclic groups are refused where the identity is cyclic-only") {
    ModelBundle b = lattice_rank1(2);
    OrbifoldDescriptor d = *b.descriptor;
    d.group = FiniteGroup::product_of_cyclics({2, 2});
    // descriptor is now inconsistent, but the cyclic gate fires first
    CHECK_THROWS_AS(sector_identity(b.modular_data(), d, 0), Unsupported);
    CHECK_THROWS_AS(sector_sum_check(b.modular_data(), d), Unsupported);
}

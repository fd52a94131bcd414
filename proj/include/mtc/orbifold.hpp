#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtc/group.hpp"
#include "mtc/modular_data.hpp"

namespace mtc {

// One twisted module in some sector: its label, its quantum dimension over V
// (or the S-entry with the vacuum, from which the qdim follows), and the
// orbit it belongs to under the group action on module labels.
struct TwistedModuleRecord {
    std::string label;
    std::optional<double> qdim;
    std::optional<Complex> s_mv;
    int orbit = -1;
};

// Per-orbit input data: stabilizer order |G_M| and the dimensions of the
// irreducibles of the twisted group algebra of the stabilizer.
struct OrbitData {
    int id = -1;
    int stabilizer_order = 1;
    std::vector<int> irrep_dims;
    std::optional<std::vector<int>> stabilizer; // element list, when known
};

// Input contract describing a G-action on the twisted modules of V: sectors
// per group element, orbit/stabilizer data, and the action on V's own labels
// (given on a generating set; everything else is composed from it).
struct OrbifoldDescriptor {
    FiniteGroup group;
    std::map<int, std::vector<TwistedModuleRecord>> sectors; // element -> modules
    std::vector<OrbitData> orbits;
    std::map<int, std::vector<std::size_t>> action_on_untwisted; // element -> perm

    const OrbitData& orbit(int id) const;
};

struct DescriptorCheck {
    std::string invariant;
    bool pass = false;
    std::string detail;
};

struct DescriptorReport {
    std::vector<DescriptorCheck> checks;
    bool pass = false;
};

// Enforces every internal consistency law: the identity sector matches V's
// labels, the action fixes the vacuum, sum dims^2 = |G_M| per orbit, orbit
// sizes equal [G:G_M], the sector element sits in the stabilizer, qdims are
// positive and constant along orbits.
DescriptorReport validate_descriptor(const ModularData& md_v, const OrbifoldDescriptor& d);

// Permutation of V's labels induced by an arbitrary group element, composed
// from the generator permutations (right action: P(gh) = P(h) o P(g)).
std::vector<std::size_t> action_permutation(const OrbifoldDescriptor& d, int g);

// One irreducible of the fixed-point theory: orbit representative j and a
// lambda slot, with its quantum dimension and S-entry against the vacuum.
struct DerivedIrrep {
    int orbit = -1;
    int lambda = -1;
    int sector = 0;          // group element whose sector the parent lives in
    std::string parent_label;
    double qdim_vg = 0.0;
    Complex s_with_vg_vacuum{0.0, 0.0};
};

struct DerivedOrbifoldData {
    std::vector<DerivedIrrep> irreps;
    double s_vg_vacuum = 0.0; // S_{V,V} / |G|
    double glob_vg = 0.0;     // 1 / s_vg_vacuum^2
};

// qdim of each fixed-point irreducible is [G:G_M] d_lambda qdim_V(M), its
// vacuum S-entry (d_lambda/|G_M|) S_{M,V}; throws InvalidDescriptor naming
// the violated invariant if the input contract fails.
DerivedOrbifoldData derive(const ModularData& md_v, const OrbifoldDescriptor& d);

struct WholeModuleQdim {
    double value = 0.0;    // |G| qdim_V(M^j)
    double identity_dev = 0.0; // vs sum_lambda d_lambda qdim_vg(M^j_lambda)
    bool pass = false;
};

WholeModuleQdim whole_module_qdim(const ModularData& md_v, const OrbifoldDescriptor& d,
                                  int orbit_id);

struct CountingCheck {
    long twisted_count = 0;
    long stable_count = 0;
    bool pass = false;
};

// |sector g| vs the number of fixed labels of the g-action on V's modules.
CountingCheck counting_check(const ModularData& md_v, const OrbifoldDescriptor& d, int g);

struct IdentityCheck {
    std::string id;
    double lhs = 0.0;
    double rhs = 0.0;
    double deviation = 0.0;
    bool pass = false;
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool pass = false;
};

// The four global-dimension identities: glob(V^G) vs |G|^2 glob(V), glob(V)
// vs the orbit-stabilizer sum, |G| glob(V) vs the all-sector qdim square sum,
// and glob(V^G) vs the derived qdim square sum.
IdentityReport glob_identities(const ModularData& md_v, const OrbifoldDescriptor& d,
                               double tol = 1e-7);

struct SectorIdentity {
    double sum = 0.0;
    double glob = 0.0;
    bool pass = false;
};

// sum of qdim^2 over one sector equals glob(V); proved for cyclic groups,
// anything else is Unsupported.
SectorIdentity sector_identity(const ModularData& md_v, const OrbifoldDescriptor& d, int g,
                               double tol = 1e-7);

struct SectorMassSolution {
    std::vector<double> x;
    double max_dev_from_uniform = 0.0;
    double residual = 0.0; // of the original linear system
};

// Solves sum_r x_r e^{2 pi i r s/T} = delta_{s,0} by inverse DFT.
SectorMassSolution sector_mass_solve(long t);

struct SectorSum {
    int r = 0;
    double sum = 0.0;
    double expected = 0.0;
    bool pass = false;
};

// Per-sector derived qdim^2 sums against glob(V^G)/T, cyclic groups.
std::vector<SectorSum> sector_sum_check(const ModularData& md_v, const OrbifoldDescriptor& d,
                                        double tol = 1e-7);

struct SectorRatio {
    std::string label;
    Complex ratio{0.0, 0.0};
    Complex expected{0.0, 0.0};
    double deviation = 0.0;
    bool pass = false;
};

// With externally supplied fixed-point modular data, a designated label for
// the first eigenspace component and a sector map, checks
// S_{V^1,X} / S_{V^G,X} = e^{2 pi i r/T} for every label X.
std::vector<SectorRatio> sector_ratio_check(const ModularData& md_vg,
                                            const std::string& v1_label,
                                            const std::map<std::string, long>& sector_of,
                                            long t, double tol = 1e-7);

struct PermutationOrbifoldQdims {
    std::vector<double> qdims; // of the cycle-twisted images over V^{(x) k}
    double sum_of_squares = 0.0;
    double glob_power = 0.0;   // glob(V)^k
    bool pass = false;
};

// qdim over the k-th tensor power of the cycle twist of each module:
// S_{M,vac} / S_{vac,vac}^k, with the square sum equal to glob(V)^k.
PermutationOrbifoldQdims permutation_orbifold_qdims(const ModularData& md_v, long k,
                                                    double tol = 1e-9);

} // namespace mtc

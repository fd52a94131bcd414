#include "mtc/orbifold.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace mtc {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double qdim_of(const TwistedModuleRecord& rec, const ModularData& md_v) {
    if (rec.qdim)
        return *rec.qdim;
    if (rec.s_mv) {
        double svv = md_v.s.at(md_v.vacuum, md_v.vacuum).real();
        return rec.s_mv->real() / svv;
    }
    throw InvalidDescriptor("record_has_qdim_or_s_entry",
                            "record '" + rec.label + "' carries neither qdim nor S entry");
}

Complex s_mv_of(const TwistedModuleRecord& rec, const ModularData& md_v) {
    if (rec.s_mv)
        return *rec.s_mv;
    double svv = md_v.s.at(md_v.vacuum, md_v.vacuum).real();
    return Complex(*rec.qdim * svv, 0.0);
}

bool group_is_cyclic(const FiniteGroup& g) {
    if (g.kind() == FiniteGroup::Kind::Cyclic)
        return true;
    for (int a = 0; a < g.order(); ++a)
        if (g.element_order(a) == g.order())
            return true;
    return false;
}

// For a cyclic group, the power g^r of a fixed generator for each r.
std::vector<int> cyclic_powers(const FiniteGroup& g) {
    int gen = -1;
    for (int a = 0; a < g.order(); ++a)
        if (g.element_order(a) == g.order()) {
            gen = a;
            break;
        }
    if (gen < 0)
        throw Unsupported("group is not cyclic");
    std::vector<int> pow{0};
    for (int r = 1; r < g.order(); ++r)
        pow.push_back(g.mul(pow.back(), gen));
    return pow;
}

} // namespace

const OrbitData& OrbifoldDescriptor::orbit(int id) const {
    for (const auto& o : orbits)
        if (o.id == id)
            return o;
    throw StructuralError("unknown orbit id " + std::to_string(id));
}

std::vector<std::size_t> action_permutation(const OrbifoldDescriptor& d, int g) {
    std::size_t n = 0;
    if (!d.action_on_untwisted.empty())
        n = d.action_on_untwisted.begin()->second.size();
    else if (d.sectors.count(0))
        n = d.sectors.at(0).size();
    std::vector<std::size_t> id(n);
    for (std::size_t i = 0; i < n; ++i)
        id[i] = i;

    std::map<int, std::vector<std::size_t>> known;
    known[0] = id;
    for (const auto& [k, p] : d.action_on_untwisted) {
        if (p.size() != n)
            throw StructuralError("action permutation length mismatch");
        known[k] = p;
    }
    bool grew = true;
    while (grew && !known.count(g)) {
        grew = false;
        std::vector<std::pair<int, std::vector<std::size_t>>> snapshot(known.begin(),
                                                                       known.end());
        for (const auto& [x, px] : snapshot)
            for (const auto& [k, pk] : d.action_on_untwisted) {
                int xk = d.group.mul(x, k);
                if (known.count(xk))
                    continue;
                std::vector<std::size_t> p(n);
                for (std::size_t i = 0; i < n; ++i)
                    p[i] = pk[px[i]]; // right action: act by x, then by k
                known[xk] = std::move(p);
                grew = true;
            }
    }
    auto it = known.find(g);
    if (it == known.end())
        throw StructuralError("action keys do not generate the requested element");
    return it->second;
}

DescriptorReport validate_descriptor(const ModularData& md_v, const OrbifoldDescriptor& d) {
    DescriptorReport rep;
    auto check = [&](const std::string& inv, bool ok, const std::string& detail) {
        rep.checks.push_back({inv, ok, ok ? "" : detail});
    };
    const int gsize = d.group.order();

    bool keys_ok = d.sectors.count(0) > 0;
    for (const auto& [g, recs] : d.sectors)
        keys_ok = keys_ok && g >= 0 && g < gsize;
    check("sectors_keyed_by_group_elements", keys_ok,
          "sector keys must be group elements, the identity sector is required");

    {
        std::multiset<std::string> want(md_v.labels.begin(), md_v.labels.end());
        std::multiset<std::string> got;
        if (d.sectors.count(0))
            for (const auto& r : d.sectors.at(0))
                got.insert(r.label);
        check("identity_sector_matches_labels", want == got,
              "identity-sector records must be exactly the labels of V");
    }

    {
        bool ok = true;
        std::ostringstream why;
        for (const auto& [g, p] : d.action_on_untwisted) {
            std::vector<bool> seen(p.size(), false);
            if (p.size() != md_v.size()) {
                ok = false;
                why << "permutation for element " << g << " has the wrong length; ";
                continue;
            }
            for (std::size_t v : p) {
                if (v >= p.size() || seen[v]) {
                    ok = false;
                    why << "element " << g << " action is not a permutation; ";
                    break;
                }
                seen[v] = true;
            }
            if (ok && p[md_v.vacuum] != md_v.vacuum) {
                ok = false;
                why << "element " << g << " action moves the vacuum; ";
            }
        }
        check("action_fixes_vacuum", ok, why.str());
    }

    {
        bool ok = true;
        std::ostringstream why;
        std::map<int, long> orbit_sizes;
        for (const auto& [g, recs] : d.sectors)
            for (const auto& r : recs)
                ++orbit_sizes[r.orbit];
        std::set<int> known_ids;
        for (const auto& o : d.orbits) {
            known_ids.insert(o.id);
            long dimsq = 0;
            for (int di : o.irrep_dims)
                dimsq += static_cast<long>(di) * di;
            if (dimsq != o.stabilizer_order) {
                ok = false;
                why << "orbit " << o.id << ": sum dims^2 = " << dimsq << " != |G_M| = "
                    << o.stabilizer_order << "; ";
            }
        }
        check("orbit_dims_square_sum", ok, why.str());

        ok = true;
        std::ostringstream why2;
        for (const auto& o : d.orbits) {
            if (o.stabilizer_order <= 0 || gsize % o.stabilizer_order != 0) {
                ok = false;
                why2 << "orbit " << o.id << ": stabilizer order does not divide |G|; ";
                continue;
            }
            long expect = gsize / o.stabilizer_order;
            if (orbit_sizes.count(o.id) && orbit_sizes[o.id] != expect) {
                ok = false;
                why2 << "orbit " << o.id << ": size " << orbit_sizes[o.id] << " != [G:G_M] = "
                     << expect << "; ";
            }
        }
        check("orbit_size_index", ok, why2.str());

        ok = true;
        for (const auto& [g, recs] : d.sectors)
            for (const auto& r : recs)
                ok = ok && known_ids.count(r.orbit) > 0 && orbit_sizes.count(r.orbit) > 0;
        check("orbit_ids_known", ok, "record references an undeclared orbit");
    }

    {
        // the sector element must stabilize each of its modules
        bool ok = true;
        std::ostringstream why;
        for (const auto& [g, recs] : d.sectors)
            for (const auto& r : recs) {
                const OrbitData* o = nullptr;
                for (const auto& cand : d.orbits)
                    if (cand.id == r.orbit)
                        o = &cand;
                if (!o)
                    continue;
                if (o->stabilizer) {
                    bool in = std::find(o->stabilizer->begin(), o->stabilizer->end(), g) !=
                              o->stabilizer->end();
                    if (!in) {
                        ok = false;
                        why << "element " << g << " absent from the stabilizer of orbit "
                            << o->id << "; ";
                    }
                } else if (g < gsize && o->stabilizer_order % d.group.element_order(g) != 0) {
                    ok = false;
                    why << "ord(" << g << ") does not divide |G_M| of orbit " << o->id
                        << "; ";
                }
            }
        check("sector_element_in_stabilizer", ok, why.str());
    }

    {
        bool ok = true;
        std::ostringstream why;
        for (const auto& [g, recs] : d.sectors)
            for (const auto& r : recs) {
                double q = 0.0;
                try {
                    q = qdim_of(r, md_v);
                } catch (const InvalidDescriptor&) {
                    ok = false;
                    why << "record '" << r.label << "' has no dimension data; ";
                    continue;
                }
                if (!(q > 0.0)) {
                    ok = false;
                    why << "record '" << r.label << "' has nonpositive qdim; ";
                }
                if (r.s_mv && std::abs(r.s_mv->imag()) > md_v.axiom_tol) {
                    ok = false;
                    why << "record '" << r.label << "' has a nonreal vacuum S-entry; ";
                }
                if (r.qdim && r.s_mv) {
                    double svv = md_v.s.at(md_v.vacuum, md_v.vacuum).real();
                    if (std::abs(r.s_mv->real() / svv - *r.qdim) > md_v.axiom_tol) {
                        ok = false;
                        why << "record '" << r.label << "' qdim and S entry disagree; ";
                    }
                }
            }
        check("qdim_positive", ok, why.str());
    }

    {
        bool ok = true;
        std::map<int, double> seen;
        for (const auto& [g, recs] : d.sectors)
            for (const auto& r : recs) {
                double q = 0.0;
                try {
                    q = qdim_of(r, md_v);
                } catch (const InvalidDescriptor&) {
                    continue;
                }
                auto it = seen.find(r.orbit);
                if (it == seen.end())
                    seen.emplace(r.orbit, q);
                else
                    ok = ok && std::abs(it->second - q) <= md_v.axiom_tol;
            }
        check("orbit_qdim_consistent", ok,
              "modules in one orbit must share their quantum dimension");
    }

    {
        // identity-sector records must reproduce the S-matrix dimensions
        bool ok = true;
        if (d.sectors.count(0)) {
            for (const auto& r : d.sectors.at(0)) {
                try {
                    std::size_t idx = md_v.label_index(r.label);
                    double q = qdim_of(r, md_v);
                    ok = ok && std::abs(q - quantum_dimension(md_v, idx)) <=
                                   10.0 * md_v.axiom_tol;
                } catch (const Error&) {
                    ok = false;
                }
            }
        }
        check("identity_sector_qdims_match", ok,
              "untwisted record qdims must match the S-matrix values");
    }

    rep.pass = true;
    for (const auto& c : rep.checks)
        rep.pass = rep.pass && c.pass;
    return rep;
}

namespace {

struct OrbitRep {
    int sector = 0;
    const TwistedModuleRecord* rec = nullptr;
};

std::map<int, OrbitRep> orbit_representatives(const OrbifoldDescriptor& d) {
    std::map<int, OrbitRep> reps;
    for (const auto& [g, recs] : d.sectors)
        for (const auto& r : recs)
            if (!reps.count(r.orbit))
                reps[r.orbit] = OrbitRep{g, &r};
    return reps;
}

} // namespace

DerivedOrbifoldData derive(const ModularData& md_v, const OrbifoldDescriptor& d) {
    DescriptorReport rep = validate_descriptor(md_v, d);
    if (!rep.pass) {
        for (const auto& c : rep.checks)
            if (!c.pass)
                throw InvalidDescriptor(c.invariant, c.detail);
    }

    const int gsize = d.group.order();
    double svv = md_v.s.at(md_v.vacuum, md_v.vacuum).real();

    DerivedOrbifoldData out;
    out.s_vg_vacuum = svv / static_cast<double>(gsize);
    out.glob_vg = 1.0 / (out.s_vg_vacuum * out.s_vg_vacuum);

    for (const auto& [oid, rep_entry] : orbit_representatives(d)) {
        const OrbitData& orb = d.orbit(oid);
        double q = qdim_of(*rep_entry.rec, md_v);
        Complex smv = s_mv_of(*rep_entry.rec, md_v);
        long index = gsize / orb.stabilizer_order;
        for (std::size_t l = 0; l < orb.irrep_dims.size(); ++l) {
            double dl = static_cast<double>(orb.irrep_dims[l]);
            DerivedIrrep ir;
            ir.orbit = oid;
            ir.lambda = static_cast<int>(l);
            ir.sector = rep_entry.sector;
            ir.parent_label = rep_entry.rec->label;
            ir.qdim_vg = static_cast<double>(index) * dl * q;
            ir.s_with_vg_vacuum = (dl / static_cast<double>(orb.stabilizer_order)) * smv;
            out.irreps.push_back(std::move(ir));
        }
    }
    return out;
}

WholeModuleQdim whole_module_qdim(const ModularData& md_v, const OrbifoldDescriptor& d,
                                  int orbit_id) {
    DerivedOrbifoldData derived = derive(md_v, d);
    auto reps = orbit_representatives(d);
    if (!reps.count(orbit_id))
        throw StructuralError("orbit without records: " + std::to_string(orbit_id));
    double q = qdim_of(*reps[orbit_id].rec, md_v);

    WholeModuleQdim out;
    out.value = static_cast<double>(d.group.order()) * q;
    const OrbitData& orb = d.orbit(orbit_id);
    double sum = 0.0;
    for (const auto& ir : derived.irreps)
        if (ir.orbit == orbit_id)
            sum += static_cast<double>(orb.irrep_dims[static_cast<std::size_t>(ir.lambda)]) *
                   ir.qdim_vg;
    out.identity_dev = std::abs(out.value - sum);
    out.pass = out.identity_dev <= md_v.axiom_tol * std::max(1.0, std::abs(out.value));
    return out;
}

CountingCheck counting_check(const ModularData& md_v, const OrbifoldDescriptor& d, int g) {
    (void)md_v; // the count depends only on the descriptor's action data
    CountingCheck out;
    if (d.sectors.count(g))
        out.twisted_count = static_cast<long>(d.sectors.at(g).size());
    std::vector<std::size_t> p = action_permutation(d, g);
    for (std::size_t i = 0; i < p.size(); ++i)
        out.stable_count += p[i] == i ? 1 : 0;
    out.pass = out.twisted_count == out.stable_count;
    return out;
}

IdentityReport glob_identities(const ModularData& md_v, const OrbifoldDescriptor& d,
                               double tol) {
    DerivedOrbifoldData derived = derive(md_v, d);
    const double gsize = static_cast<double>(d.group.order());
    double glob_v = global_dimension(md_v).value;

    IdentityReport rep;
    auto push = [&](const std::string& id, double lhs, double rhs) {
        double dev = std::abs(lhs - rhs);
        rep.checks.push_back({id, lhs, rhs, dev, dev <= tol * std::max(1.0, std::abs(rhs))});
    };

    push("glob_vg_vs_group_squared", derived.glob_vg, gsize * gsize * glob_v);

    double orbit_sum = 0.0;
    auto reps = orbit_representatives(d);
    for (const auto& [oid, r] : reps) {
        double q = qdim_of(*r.rec, md_v);
        orbit_sum += q * q / static_cast<double>(d.orbit(oid).stabilizer_order);
    }
    push("glob_v_vs_orbit_sum", glob_v, orbit_sum);

    double sector_sum = 0.0;
    for (const auto& [g, recs] : d.sectors)
        for (const auto& r : recs) {
            double q = qdim_of(r, md_v);
            sector_sum += q * q;
        }
    push("group_times_glob_v_vs_twisted_sum", gsize * glob_v, sector_sum);

    double derived_sum = 0.0;
    for (const auto& ir : derived.irreps)
        derived_sum += ir.qdim_vg * ir.qdim_vg;
    push("glob_vg_vs_derived_sum", derived.glob_vg, derived_sum);

    rep.pass = true;
    for (const auto& c : rep.checks)
        rep.pass = rep.pass && c.pass;
    return rep;
}

SectorIdentity sector_identity(const ModularData& md_v, const OrbifoldDescriptor& d, int g,
                               double tol) {
    if (!group_is_cyclic(d.group))
        throw Unsupported("sector identity is proved for cyclic groups only");
    SectorIdentity out;
    out.glob = global_dimension(md_v).value;
    if (d.sectors.count(g))
        for (const auto& r : d.sectors.at(g)) {
            double q = qdim_of(r, md_v);
            out.sum += q * q;
        }
    out.pass = std::abs(out.sum - out.glob) <= tol * std::max(1.0, out.glob);
    return out;
}

SectorMassSolution sector_mass_solve(long t) {
    if (t < 1)
        throw DomainError("sector mass solve needs T >= 1");
    SectorMassSolution out;
    const double td = static_cast<double>(t);
    // A_{s,r} = e^{2 pi i r s/T}; x = A^{-1} delta with A^{-1} = (1/T) conj(A)
    std::vector<Complex> x(static_cast<std::size_t>(t));
    for (long r = 0; r < t; ++r) {
        Complex acc(0.0, 0.0);
        for (long s = 0; s < t; ++s) {
            double rhs = s == 0 ? 1.0 : 0.0;
            acc += std::polar(1.0, -kTwoPi * static_cast<double>(r * s) / td) * rhs;
        }
        x[static_cast<std::size_t>(r)] = acc / td;
    }
    for (long r = 0; r < t; ++r) {
        out.x.push_back(x[static_cast<std::size_t>(r)].real());
        double dev = std::abs(x[static_cast<std::size_t>(r)] - Complex(1.0 / td, 0.0));
        out.max_dev_from_uniform = std::max(out.max_dev_from_uniform, dev);
    }
    for (long s = 0; s < t; ++s) {
        Complex acc(0.0, 0.0);
        for (long r = 0; r < t; ++r)
            acc += x[static_cast<std::size_t>(r)] *
                   std::polar(1.0, kTwoPi * static_cast<double>(r * s) / td);
        double want = s == 0 ? 1.0 : 0.0;
        out.residual = std::max(out.residual, std::abs(acc - Complex(want, 0.0)));
    }
    return out;
}

std::vector<SectorSum> sector_sum_check(const ModularData& md_v, const OrbifoldDescriptor& d,
                                        double tol) {
    if (!group_is_cyclic(d.group))
        throw Unsupported("per-sector sums are proved for cyclic groups only");
    DerivedOrbifoldData derived = derive(md_v, d);
    std::vector<int> powers = cyclic_powers(d.group);
    const long t = d.group.order();

    std::vector<SectorSum> out;
    for (long r = 0; r < t; ++r) {
        SectorSum ss;
        ss.r = static_cast<int>(r);
        ss.expected = derived.glob_vg / static_cast<double>(t);
        for (const auto& ir : derived.irreps)
            if (ir.sector == powers[static_cast<std::size_t>(r)])
                ss.sum += ir.qdim_vg * ir.qdim_vg;
        ss.pass = std::abs(ss.sum - ss.expected) <= tol * std::max(1.0, ss.expected);
        out.push_back(ss);
    }
    return out;
}

std::vector<SectorRatio> sector_ratio_check(const ModularData& md_vg,
                                            const std::string& v1_label,
                                            const std::map<std::string, long>& sector_of,
                                            long t, double tol) {
    if (v1_label.empty())
        throw Unsupported("sector ratio check needs a designated first-eigenspace label");
    std::size_t v1 = md_vg.label_index(v1_label);
    std::vector<SectorRatio> out;
    for (std::size_t x = 0; x < md_vg.size(); ++x) {
        auto it = sector_of.find(md_vg.labels[x]);
        if (it == sector_of.end())
            throw Unsupported("label '" + md_vg.labels[x] + "' has no declared sector");
        SectorRatio sr;
        sr.label = md_vg.labels[x];
        sr.ratio = md_vg.s.at(v1, x) / md_vg.s.at(md_vg.vacuum, x);
        sr.expected = std::polar(1.0, kTwoPi * static_cast<double>(it->second) /
                                          static_cast<double>(t));
        sr.deviation = std::abs(sr.ratio - sr.expected);
        sr.pass = sr.deviation <= tol;
        out.push_back(sr);
    }
    return out;
}

PermutationOrbifoldQdims permutation_orbifold_qdims(const ModularData& md_v, long k,
                                                    double tol) {
    if (k < 1)
        throw DomainError("cycle length must be >= 1");
    PermutationOrbifoldQdims out;
    double svv = md_v.s.at(md_v.vacuum, md_v.vacuum).real();
    double denom = std::pow(svv, static_cast<double>(k));
    for (std::size_t m = 0; m < md_v.size(); ++m) {
        Complex s = md_v.s.at(m, md_v.vacuum);
        if (std::abs(s.imag()) > md_v.axiom_tol)
            throw NotModularData("vacuum column entry is not real");
        double q = s.real() / denom;
        out.qdims.push_back(q);
        out.sum_of_squares += q * q;
    }
    out.glob_power = std::pow(1.0 / (svv * svv), static_cast<double>(k));
    out.pass = std::abs(out.sum_of_squares - out.glob_power) <=
               tol * std::max(1.0, out.glob_power);
    return out;
}

} // namespace mtc

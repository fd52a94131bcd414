#include "mtc/models.hpp"

#include <cmath>

namespace mtc {

ModelBundle lattice_rank1(long k) {
    if (k < 1)
        throw DomainError("lattice parameter k must be >= 1");
    const long n = 2 * k;

    ModelBundle b;
    b.name = "lattice_rank1(" + std::to_string(k) + ")";
    b.notes = "rank-one even lattice of squared norm 2k; S from the discrete "
              "Gaussian e^{-pi i rs/k}/sqrt(2k), cross-checked by the axioms, "
              "the cyclic fusion ring and the character limits";

    std::vector<std::string> labels;
    for (long r = 0; r < n; ++r)
        labels.push_back("r" + std::to_string(r));
    CMatrix s(static_cast<std::size_t>(n));
    for (long r = 0; r < n; ++r)
        for (long c = 0; c < n; ++c)
            s.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                std::polar(1.0 / std::sqrt(2.0 * static_cast<double>(k)),
                           -M_PI * static_cast<double>(r) * static_cast<double>(c) /
                               static_cast<double>(k));
    ModularData md(labels, 0, s);
    std::vector<Rational> weights;
    for (long r = 0; r < n; ++r) {
        long m = std::min(r * r, (n - r) * (n - r));
        weights.push_back(make_rational(m, 4 * k));
    }
    md.weights = weights;
    md.central_charge = Rational(1);
    b.md = md;

    for (long r = 0; r < n; ++r)
        b.characters[labels[static_cast<std::size_t>(r)]] = char_lattice(k, r);
    b.characters["T0"] = char_lattice_twisted(k);
    b.characters["T1"] = char_lattice_twisted(k); // identical character series

    OrbifoldDescriptor d;
    d.group = FiniteGroup::cyclic(2);

    std::vector<TwistedModuleRecord> untwisted;
    std::vector<OrbitData> orbits;
    // r = 0 and r = k are fixed by the involution; other labels pair up
    auto orbit_of = [&](long r) {
        if (r == 0)
            return 0;
        if (r == k)
            return 1;
        return static_cast<int>(1 + std::min(r, n - r));
    };
    for (long r = 0; r < n; ++r) {
        TwistedModuleRecord rec;
        rec.label = labels[static_cast<std::size_t>(r)];
        rec.qdim = 1.0;
        rec.orbit = orbit_of(r);
        untwisted.push_back(rec);
    }
    orbits.push_back(OrbitData{0, 2, {1, 1}, std::vector<int>{0, 1}});
    orbits.push_back(OrbitData{1, 2, {1, 1}, std::vector<int>{0, 1}});
    for (long r = 1; r < k; ++r)
        orbits.push_back(OrbitData{static_cast<int>(1 + r), 1, {1}, std::vector<int>{0}});

    std::vector<TwistedModuleRecord> twisted;
    for (int i = 0; i < 2; ++i) {
        TwistedModuleRecord rec;
        rec.label = "T" + std::to_string(i);
        rec.qdim = std::sqrt(static_cast<double>(k));
        rec.orbit = static_cast<int>(k + 1 + i);
        twisted.push_back(rec);
        orbits.push_back(OrbitData{static_cast<int>(k + 1 + i), 2, {1, 1},
                                   std::vector<int>{0, 1}});
    }

    d.sectors[0] = untwisted;
    d.sectors[1] = twisted;
    d.orbits = orbits;
    std::vector<std::size_t> theta(static_cast<std::size_t>(n));
    for (long r = 0; r < n; ++r)
        theta[static_cast<std::size_t>(r)] = static_cast<std::size_t>((n - r) % n);
    d.action_on_untwisted[1] = theta;
    b.descriptor = d;
    return b;
}

ModelBundle heisenberg(long d) {
    if (d < 1)
        throw DomainError("rank must be >= 1");
    ModelBundle b;
    b.name = "heisenberg(" + std::to_string(d) + ")";
    b.notes = "rank-d free boson; not rational, characters only";
    b.rational = false;
    b.characters["M(1)"] = char_heisenberg(d);
    b.characters["M(1)(theta)"] = char_heisenberg_twisted(d);
    return b;
}

ModelBundle holomorphic_cyclic(long t) {
    if (t < 1)
        throw DomainError("cyclic order must be >= 1");
    ModelBundle b;
    b.name = "holomorphic_cyclic(" + std::to_string(t) + ")";
    b.notes = "one-module theory with a faithful cyclic action; one twisted "
              "module of qdim 1 per sector, every stabilizer the full group";

    CMatrix s(1);
    s.at(0, 0) = 1.0;
    ModularData md({"V"}, 0, s);
    md.weights = std::vector<Rational>{Rational(0)};
    b.md = md;

    OrbifoldDescriptor d;
    d.group = FiniteGroup::cyclic(t);
    std::vector<int> full;
    for (long g = 0; g < t; ++g)
        full.push_back(static_cast<int>(g));
    for (long g = 0; g < t; ++g) {
        TwistedModuleRecord rec;
        rec.label = g == 0 ? "V" : "V(g^" + std::to_string(g) + ")";
        rec.qdim = 1.0;
        rec.orbit = static_cast<int>(g);
        d.sectors[static_cast<int>(g)] = {rec};
        d.orbits.push_back(OrbitData{static_cast<int>(g), static_cast<int>(t),
                                     std::vector<int>(static_cast<std::size_t>(t), 1), full});
    }
    d.action_on_untwisted[t > 1 ? 1 : 0] = {0};
    b.descriptor = d;
    return b;
}

ModelBundle tensor_power(const ModularData& md, long k) {
    if (k < 1)
        throw DomainError("tensor power must be >= 1");
    double labels = std::pow(static_cast<double>(md.size()), static_cast<double>(k));
    if (labels > 4096.0)
        throw TooLarge("tensor power would exceed 4096 labels");

    ModelBundle b;
    b.name = "tensor_power(" + std::to_string(k) + ")";
    b.notes = "k-fold Kronecker power of the input theory";

    const std::vector<Rational> w0 =
        md.weights ? *md.weights : std::vector<Rational>(md.size(), Rational(0));
    std::vector<std::string> names = md.labels;
    CMatrix s = md.s;
    std::vector<Rational> w = w0;
    for (long i = 1; i < k; ++i) {
        std::vector<std::string> next_names;
        std::vector<Rational> next_w;
        for (std::size_t a = 0; a < names.size(); ++a)
            for (std::size_t c = 0; c < md.size(); ++c) {
                next_names.push_back(names[a] + "\xE2\x8A\x97" + md.labels[c]); // U+2297
                next_w.push_back(w[a] + w0[c]);
            }
        s = kronecker(s, md.s);
        names = std::move(next_names);
        w = std::move(next_w);
    }

    std::size_t vac = 0;
    for (long i = 0; i < k; ++i)
        vac = vac * md.size() + md.vacuum;
    ModularData out(names, vac, s);
    if (md.weights)
        out.weights = w;
    b.md = out;

    double gv = global_dimension(md).value;
    double gk = global_dimension(out).value;
    if (std::abs(gk - std::pow(gv, static_cast<double>(k))) >
        md.axiom_tol * std::max(1.0, gk))
        throw NotModularData("global dimension is not multiplicative under tensor powers");
    return b;
}

} // namespace mtc

#include "mtc/drinfeld_double.hpp"

#include <cmath>

namespace mtc {

DoubleElement DoubleElement::basis(int x, int g) {
    DoubleElement e;
    e.coeffs[{x, g}] = 1.0;
    return e;
}

DoubleElement DoubleElement::unit(const FiniteGroup& g) {
    DoubleElement e;
    for (int h = 0; h < g.order(); ++h)
        e.coeffs[{0, h}] = 1.0;
    return e;
}

void DoubleElement::add(int x, int g, std::complex<double> c) {
    auto key = std::make_pair(x, g);
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
        if (c != std::complex<double>(0.0, 0.0))
            coeffs.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == std::complex<double>(0.0, 0.0))
        coeffs.erase(it);
}

void DoubleTensor::add(const std::pair<int, int>& a, const std::pair<int, int>& b,
                       std::complex<double> c) {
    auto key = std::make_pair(a, b);
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
        if (c != std::complex<double>(0.0, 0.0))
            coeffs.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second == std::complex<double>(0.0, 0.0))
        coeffs.erase(it);
}

DoubleElement dg_multiply(const DoubleElement& a, const DoubleElement& b,
                          const FiniteGroup& g) {
    DoubleElement out;
    for (const auto& [ka, ca] : a.coeffs)
        for (const auto& [kb, cb] : b.coeffs) {
            if (ka.second != kb.second)
                continue; // delta_{g,h}
            out.add(g.mul(ka.first, kb.first), ka.second, ca * cb);
        }
    return out;
}

DoubleTensor dg_comultiply(const DoubleElement& a, const FiniteGroup& g) {
    DoubleTensor out;
    for (const auto& [k, c] : a.coeffs)
        for (int h = 0; h < g.order(); ++h)
            for (int kk = 0; kk < g.order(); ++kk)
                if (g.mul(h, kk) == k.second)
                    out.add({k.first, h}, {k.first, kk}, c);
    return out;
}

DoubleTensor tensor_multiply(const DoubleTensor& a, const DoubleTensor& b,
                             const FiniteGroup& g) {
    DoubleTensor out;
    for (const auto& [ka, ca] : a.coeffs)
        for (const auto& [kb, cb] : b.coeffs) {
            if (ka.first.second != kb.first.second || ka.second.second != kb.second.second)
                continue;
            out.add({g.mul(ka.first.first, kb.first.first), ka.first.second},
                    {g.mul(ka.second.first, kb.second.first), ka.second.second}, ca * cb);
        }
    return out;
}

std::vector<DoubleIrrep> dg_irreps(const FiniteGroup& g) {
    if (!g.is_abelian())
        throw Unsupported("double irreps are generated for abelian groups only");
    std::vector<DoubleIrrep> out;
    for (int l = 0; l < g.order(); ++l)
        for (int s = 0; s < g.order(); ++s)
            out.push_back(DoubleIrrep{l, s});
    return out;
}

namespace {

// index of the pointwise product of two dual-group characters
int character_product(const FiniteGroup& g, int l1, int l2) {
    if (g.kind() != FiniteGroup::Kind::Table) {
        std::vector<long> t1 = g.tuple_of(l1), t2 = g.tuple_of(l2);
        const auto& orders = g.cyclic_orders();
        std::vector<long> t(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i)
            t[i] = (t1[i] + t2[i]) % orders[i];
        return g.index_of_tuple(t);
    }
    auto dual = abelian_dual(g);
    for (std::size_t j = 0; j < dual.size(); ++j) {
        double dev = 0.0;
        for (int a = 0; a < g.order(); ++a)
            dev = std::max(dev, std::abs(dual[j].values[static_cast<std::size_t>(a)] -
                                         dual[static_cast<std::size_t>(l1)]
                                                 .values[static_cast<std::size_t>(a)] *
                                             dual[static_cast<std::size_t>(l2)]
                                                 .values[static_cast<std::size_t>(a)]));
        if (dev < 1e-9)
            return static_cast<int>(j);
    }
    throw Error("dual group is not closed under products");
}

} // namespace

DoubleIrrep dg_tensor(const DoubleIrrep& a, const DoubleIrrep& b, const FiniteGroup& g) {
    return DoubleIrrep{character_product(g, a.character, b.character),
                       g.mul(a.sector, b.sector)};
}

std::complex<double> dg_act(const DoubleIrrep& irr, const DoubleElement& a,
                            const FiniteGroup& g) {
    auto dual = abelian_dual(g);
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [k, c] : a.coeffs)
        if (k.second == irr.sector)
            acc += c * dual[static_cast<std::size_t>(irr.character)]
                           .values[static_cast<std::size_t>(k.first)];
    return acc;
}

BialgebraReport dg_bialgebra_checks(const FiniteGroup& g) {
    const int m = g.order();
    BialgebraReport rep;

    rep.associative = true;
    for (int x1 = 0; x1 < m && rep.associative; ++x1)
        for (int g1 = 0; g1 < m && rep.associative; ++g1)
            for (int x2 = 0; x2 < m && rep.associative; ++x2)
                for (int g2 = 0; g2 < m && rep.associative; ++g2)
                    for (int x3 = 0; x3 < m && rep.associative; ++x3)
                        for (int g3 = 0; g3 < m && rep.associative; ++g3) {
                            DoubleElement a = DoubleElement::basis(x1, g1);
                            DoubleElement b = DoubleElement::basis(x2, g2);
                            DoubleElement c = DoubleElement::basis(x3, g3);
                            rep.associative =
                                dg_multiply(dg_multiply(a, b, g), c, g) ==
                                dg_multiply(a, dg_multiply(b, c, g), g);
                        }

    // unit laws come with the same sweep
    DoubleElement unit = DoubleElement::unit(g);
    for (int x = 0; x < m; ++x)
        for (int h = 0; h < m; ++h) {
            DoubleElement a = DoubleElement::basis(x, h);
            rep.associative = rep.associative && dg_multiply(unit, a, g) == a &&
                              dg_multiply(a, unit, g) == a;
        }

    rep.coassociative = true;
    rep.comultiplicative = true;
    for (int x = 0; x < m && rep.coassociative; ++x)
        for (int h = 0; h < m && rep.coassociative; ++h) {
            DoubleElement a = DoubleElement::basis(x, h);
            DoubleTensor d = dg_comultiply(a, g);
            // (Delta x id) Delta = (id x Delta) Delta, flattened to triples
            std::map<std::tuple<int, int, int, int, int, int>, std::complex<double>> lhs, rhs;
            for (const auto& [k, c] : d.coeffs) {
                DoubleTensor left = dg_comultiply(
                    DoubleElement::basis(k.first.first, k.first.second), g);
                for (const auto& [kl, cl] : left.coeffs)
                    lhs[{kl.first.first, kl.first.second, kl.second.first, kl.second.second,
                         k.second.first, k.second.second}] += c * cl;
                DoubleTensor right = dg_comultiply(
                    DoubleElement::basis(k.second.first, k.second.second), g);
                for (const auto& [kr, cr] : right.coeffs)
                    rhs[{k.first.first, k.first.second, kr.first.first, kr.first.second,
                         kr.second.first, kr.second.second}] += c * cr;
            }
            for (auto it = lhs.begin(); it != lhs.end();)
                it = it->second == std::complex<double>(0.0, 0.0) ? lhs.erase(it)
                                                                  : std::next(it);
            for (auto it = rhs.begin(); it != rhs.end();)
                it = it->second == std::complex<double>(0.0, 0.0) ? rhs.erase(it)
                                                                  : std::next(it);
            rep.coassociative = lhs == rhs;
        }

    for (int x1 = 0; x1 < m && rep.comultiplicative; ++x1)
        for (int g1 = 0; g1 < m && rep.comultiplicative; ++g1)
            for (int x2 = 0; x2 < m && rep.comultiplicative; ++x2)
                for (int g2 = 0; g2 < m && rep.comultiplicative; ++g2) {
                    DoubleElement a = DoubleElement::basis(x1, g1);
                    DoubleElement b = DoubleElement::basis(x2, g2);
                    DoubleTensor lhs = dg_comultiply(dg_multiply(a, b, g), g);
                    DoubleTensor rhs =
                        tensor_multiply(dg_comultiply(a, g), dg_comultiply(b, g), g);
                    rep.comultiplicative = lhs.coeffs == rhs.coeffs;
                }

    return rep;
}

std::vector<long> untwisted_fusion(const std::vector<ProjectiveCharacter>& table,
                                   const FiniteGroup& g, std::size_t lambda, std::size_t mu) {
    if (lambda >= table.size() || mu >= table.size())
        throw StructuralError("character index out of range");
    for (std::size_t i = 0; i < table.size(); ++i)
        for (std::size_t j = 0; j < table.size(); ++j) {
            std::complex<double> ip = character_orthogonality(table[i], table[j], g);
            if (std::abs(ip - (i == j ? 1.0 : 0.0)) > 1e-8)
                throw BadCharacterTable("character table rows are not orthonormal");
        }

    std::vector<long> mult;
    for (std::size_t gamma = 0; gamma < table.size(); ++gamma) {
        std::complex<double> acc(0.0, 0.0);
        for (int a = 0; a < g.order(); ++a)
            acc += table[lambda].values[static_cast<std::size_t>(a)] *
                   table[mu].values[static_cast<std::size_t>(a)] *
                   std::conj(table[gamma].values[static_cast<std::size_t>(a)]);
        acc /= static_cast<double>(g.order());
        double rounded = std::round(acc.real());
        double dev = std::max(std::abs(acc.real() - rounded), std::abs(acc.imag()));
        if (dev > 1e-9 || rounded < 0.0)
            throw BadCharacterTable("fusion multiplicity fails the integrality gate");
        mult.push_back(static_cast<long>(rounded));
    }
    return mult;
}

} // namespace mtc

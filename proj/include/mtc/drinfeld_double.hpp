#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "mtc/group.hpp"

namespace mtc {

// Element of the double of G on basis x (x) e(g), sparse coefficients.
struct DoubleElement {
    std::map<std::pair<int, int>, std::complex<double>> coeffs; // (x, g) -> c

    static DoubleElement basis(int x, int g);
    static DoubleElement unit(const FiniteGroup& g); // sum_g 1 (x) e(g)
    void add(int x, int g, std::complex<double> c);
    bool operator==(const DoubleElement&) const = default;
};

// Element of the tensor square, used for the coproduct.
struct DoubleTensor {
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, std::complex<double>> coeffs;
    void add(const std::pair<int, int>& a, const std::pair<int, int>& b,
             std::complex<double> c);
};

// (x (x) e(g)) (y (x) e(h)) = delta_{g,h} xy (x) e(g), extended bilinearly.
DoubleElement dg_multiply(const DoubleElement& a, const DoubleElement& b,
                          const FiniteGroup& g);

// Delta(x (x) e(g)) = sum_{hk=g} (x (x) e(h)) tensor (x (x) e(k)).
DoubleTensor dg_comultiply(const DoubleElement& a, const FiniteGroup& g);

DoubleTensor tensor_multiply(const DoubleTensor& a, const DoubleTensor& b,
                             const FiniteGroup& g);

// Irreducible label (lambda, e(g)) for abelian G: a linear character index
// into abelian_dual(G) and a sector element. x (x) e(h) acts as
// delta_{g,h} lambda(x).
struct DoubleIrrep {
    int character = 0;
    int sector = 0;
    bool operator==(const DoubleIrrep&) const = default;
};

std::vector<DoubleIrrep> dg_irreps(const FiniteGroup& g); // |G|^2 of them

// (lambda, e(g)) (x) (mu, e(h)) = (lambda mu, e(gh)); every irrep is a
// simple current and the fusion ring is the group ring of (dual G) x G.
DoubleIrrep dg_tensor(const DoubleIrrep& a, const DoubleIrrep& b, const FiniteGroup& g);

// Scalar through which a double element acts on an irrep.
std::complex<double> dg_act(const DoubleIrrep& irr, const DoubleElement& a,
                            const FiniteGroup& g);

struct BialgebraReport {
    bool associative = false;
    bool coassociative = false;
    bool comultiplicative = false; // Delta(ab) = Delta(a) Delta(b)
    bool pass() const { return associative && coassociative && comultiplicative; }
};

// Exhaustive basis checks; sized for |G| <= 8.
BialgebraReport dg_bialgebra_checks(const FiniteGroup& g);

// Multiplicity of gamma in lambda (x) mu from the character table of G,
// (1/|G|) sum_a chi_l(a) chi_m(a) conj(chi_g(a)), rounded under a 1e-9 gate.
std::vector<long> untwisted_fusion(const std::vector<ProjectiveCharacter>& table,
                                   const FiniteGroup& g, std::size_t lambda, std::size_t mu);

} // namespace mtc

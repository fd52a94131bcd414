#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "mtc/error.hpp"

namespace mtc {

// Finite group on elements 0..m-1 with element 0 the identity. The full
// multiplication table is kept; a presentation tag remembers how the group
// was built (cyclic groups and products of cyclics expose their structure,
// which the character machinery exploits).
class FiniteGroup {
public:
    enum class Kind { Cyclic, ProductOfCyclics, Table };

    FiniteGroup() = default; // empty placeholder, order() == 0

    static FiniteGroup cyclic(long t);
    static FiniteGroup product_of_cyclics(const std::vector<long>& orders);
    // Validates associativity, identity and inverses on construction.
    static FiniteGroup from_table(const std::vector<std::vector<int>>& mul);

    int order() const { return static_cast<int>(size_); }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * size_ + b]; }
    int inverse(int a) const { return inv_[a]; }
    int element_order(int a) const;
    bool is_abelian() const;

    Kind kind() const { return kind_; }
    const std::vector<long>& cyclic_orders() const { return cyclic_orders_; }
    // Index <-> exponent tuple for product presentations.
    std::vector<long> tuple_of(int a) const;
    int index_of_tuple(const std::vector<long>& t) const;

    const std::vector<int>& table() const { return table_; }

private:
    void finish(); // inverses + sanity

    Kind kind_ = Kind::Table;
    std::size_t size_ = 0;
    std::vector<int> table_;
    std::vector<int> inv_;
    std::vector<long> cyclic_orders_; // empty for Table
};

// Unitary 2-cocycle stored as an exponent table: alpha(h,k) = e^{2 pi i a(h,k)/n}
// with a(h,k) in Z_n. Normalized means a(1,h) = a(h,1) = 0.
struct TwoCocycle {
    long n = 1;
    std::vector<std::vector<long>> exp;

    static TwoCocycle trivial(int group_order);
    bool is_normalized() const;
    // Returns a violating triple of the cocycle identity, if any.
    std::optional<std::array<int, 3>> violation(const FiniteGroup& g) const;
    std::complex<double> value(int h, int k) const;
};

// Central extension K^ = K x <kappa> with (a, k^s)(b, k^t) = (ab, alpha(a,b) k^{s+t}).
// Element (a, s) has index a*n + s. Throws NotACocycle (with a witness triple)
// when the product fails associativity.
struct CentralExtension {
    FiniteGroup group;
    long n = 1;
    int base_order = 1;
    int index(int a, long s) const { return static_cast<int>(a * n + s); }
    int base_part(int e) const { return static_cast<int>(e / n); }
    long kappa_part(int e) const { return e % n; }
};

CentralExtension central_extension(const FiniteGroup& k, const TwoCocycle& alpha);

// Character of a twisted group algebra: values per element, dim = value at 1.
struct ProjectiveCharacter {
    std::vector<std::complex<double>> values;
    int dim() const { return static_cast<int>(std::lround(values.at(0).real())); }
};

// (1/|K|) sum_a chi1(a) conj(chi2(a)).
std::complex<double> character_orthogonality(const ProjectiveCharacter& c1,
                                             const ProjectiveCharacter& c2,
                                             const FiniteGroup& k);

// All linear characters of an abelian group. Direct for cyclic/product
// presentations; brute-forced from a generating set for table groups.
std::vector<ProjectiveCharacter> abelian_dual(const FiniteGroup& g);

// Irreducible characters of the twisted algebra C^alpha[K]. Supported:
// trivial cocycle with abelian K (dual group), cyclic K with any unitary
// cocycle (trivialized by an explicit coboundary), or any K with the
// character table of the central extension supplied externally (rows are
// filtered by kappa acting as e^{2 pi i/n}). Asserts sum dim^2 = |K| and
// pairwise orthogonality before returning.
std::vector<ProjectiveCharacter> projective_irreducibles(
    const FiniteGroup& k, const TwoCocycle& alpha,
    const std::vector<ProjectiveCharacter>* extension_table = nullptr);

// The algebra on basis a (x) e(M) for a in G, M in a G-set of module labels,
// with product a(x)e(M) . b(x)e(N) = alpha_N(a,b) ab (x) e(N) when M.b = N
// and 0 otherwise. The per-label cocycle family is stored as exponent tables
// over a common root order.
struct TwistedSectorAlgebra {
    FiniteGroup group;
    int module_count = 0;
    std::vector<std::vector<int>> action; // action[m][g] = m . g (right action)
    long root_order = 1;
    std::vector<std::vector<std::vector<long>>> alpha_exp; // [N][a][b]

    static TwistedSectorAlgebra trivial(const FiniteGroup& g,
                                        const std::vector<std::vector<int>>& action);
};

struct SectorBasisElement {
    int g = 0;
    int m = 0;
};

struct SectorProduct {
    bool zero = true;
    std::complex<double> coeff{0.0, 0.0};
    SectorBasisElement elem;
};

struct FamilyViolation {
    int module, a, b, c;
};

// Checks the right-action laws and the cocycle-family relation that makes the
// multiplication associative; returns the first violation, if any.
std::optional<FamilyViolation> validate_twisted_sector_algebra(const TwistedSectorAlgebra& spec);

SectorProduct a_alpha_multiply(const TwistedSectorAlgebra& spec, const SectorBasisElement& x,
                               const SectorBasisElement& y);

// Size of the stabilizer of module m under the right action.
int stabilizer_order(const TwistedSectorAlgebra& spec, int m);

// [G : G_M] * dim_W for the induced module over the orbit subalgebra.
long induced_dimension(const TwistedSectorAlgebra& spec, int m, long dim_w);

} // namespace mtc

#pragma once

#include <map>
#include <optional>
#include <string>

#include "mtc/char_expr.hpp"
#include "mtc/modular_data.hpp"
#include "mtc/orbifold.hpp"

namespace mtc {

// A self-consistent fixture: modular data (absent for irrational models),
// character expressions per module, and an orbifold action descriptor.
struct ModelBundle {
    std::string name;
    std::optional<ModularData> md;
    std::map<std::string, CharacterExpr> characters;
    std::optional<OrbifoldDescriptor> descriptor;
    std::string notes;
    bool rational = true;

    const ModularData& modular_data() const {
        if (!md)
            throw NotRational("model '" + name + "' has no modular data");
        return *md;
    }
};

// Rank-one even lattice of squared norm 2k: 2k modules with
// S_{rs} = e^{-pi i r s/k} / sqrt(2k), theta/eta characters, and the
// involution descriptor (r -> -r, two twisted modules of qdim sqrt k).
ModelBundle lattice_rank1(long k);

// Rank-d free boson: characters only, the model is not rational.
ModelBundle heisenberg(long d);

// One-module theory with a cyclic action of order T: one twisted module of
// qdim 1 per sector, all stabilizers the full group.
ModelBundle holomorphic_cyclic(long t);

// k-fold tensor power: Kronecker power of S on tuple labels.
ModelBundle tensor_power(const ModularData& md, long k);

} // namespace mtc

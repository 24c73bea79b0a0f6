#pragma once

#include "qcohom/lattices.hpp"

namespace qcohom {

// 1-chain: one lattice coefficient vector per group element, c = sum k_g [g].
struct Chain1 {
    std::vector<IntVec> k;

    static Chain1 zero(const PointGroup& g, int rank);
    bool is_zero() const;
    Chain1 operator+(const Chain1& o) const;
    Chain1 operator-(const Chain1& o) const;
};

// 2-chain: one coefficient vector per ordered pair, index g * N + h.
struct Chain2 {
    std::vector<IntVec> q;

    static Chain2 zero(const PointGroup& g, int rank);
};

// d(k[g]) = k.g - k, extended linearly.
IntVec boundary1(const PointGroup& g, const Chain1& c);

// d(q[g|h]) = (q.g)[h] - q[gh] + q[g], extended linearly.
Chain1 boundary2(const PointGroup& g, const Chain2& c);

// First homology of the group acting on its lattice, with explicit
// generating cycles and a membership test.
struct HomologyStructure {
    PointGroup group;
    int rank = 0;
    AbelianGroupStructure structure;
    std::vector<Chain1> generators;
    // -1 for the bar construction; otherwise the cyclic generator whose
    // k[r] chains index the ambient coordinates
    int cyclic_generator = -1;

    const std::vector<Int>& factors() const { return structure.factors; }
    Int order() const { return structure.order(); }
    bool trivial() const { return structure.trivial(); }

    // Class coordinates of a cycle (reduced mod factors); NotACycle when
    // the boundary is nonzero.
    IntVec class_of(const Chain1& c) const;
};

// Bar-resolution computation, valid for any finite group.
HomologyStructure h1_bar(const LatticeModule& l);

// ker(r - 1) / N_r L for a cyclic group; generators come out as k[r]
// chains.  NotCyclic when the group is not generated by the given element.
HomologyStructure h1_cyclic(const LatticeModule& l, int generator);

// Same invariant factors with trivialized generators; the phase module
// realizes the dual generators as cocycles.  InfiniteFactor on free parts.
AbelianGroupStructure dual_structure(const AbelianGroupStructure& s);

// The induced map H1(G, L) -> H1(G/H, L_H) given by pushing chains to
// cosets and lattice coefficients to the coinvariant quotient.
struct CoinvariantQuotientMap {
    HomologyStructure source;
    // target H1(G/H, L_H); ambient coordinates index the flattened chain
    // space of the quotient group over the coinvariant module
    AbelianGroupStructure target;
    // column j = target class coordinates of the image of source generator j
    IntMatrix matrix;
    bool surjective = false;

    // push a source cycle through the map and return target coordinates
    IntVec map_cycle(const Chain1& c) const;

    // internals needed by map_cycle
    std::vector<int> coset_of;   // parent element -> quotient coset
    int quotient_order = 0;
    IntMatrix coeff_projection;  // lattice -> coinvariant coordinates
};

CoinvariantQuotientMap coinvariant_quotient_map(const LatticeModule& l,
                                                const SubgroupData& h);

}  // namespace qcohom

#pragma once

#include <optional>

#include "qcohom/homology.hpp"

namespace qcohom {

// Sub-point-group on the same lattice; embed maps the new element indices
// to parent indices.  NotSubgroup when the set is not closed.
PointGroup subgroup_point_group(const PointGroup& parent, const std::vector<int>& members,
                                std::vector<int>* embed = nullptr);

// Phase function valued in (1/M)Z/Z: phi_g(k) = (k . v_g)/M.  The cocycle
// law phi_{gh}(k) = phi_h(k.g) + phi_g(k) reads v_{gh} = v_g + rep(g) v_h
// (mod M) in coordinates and is verified exhaustively at construction.
struct PhaseCocycle {
    PointGroup group;
    Int modulus = 1;
    std::vector<IntVec> v;  // one vector per element, entries in [0, M)

    // verifying constructor; NotACocycle when the law fails
    static PhaseCocycle create(const PointGroup& g, const Int& modulus,
                               std::vector<IntVec> values);
    static PhaseCocycle zero(const PointGroup& g, int rank);

    Frac eval(int g, const IntVec& k) const;
    PhaseCocycle operator+(const PhaseCocycle& o) const;
    PhaseCocycle operator-(const PhaseCocycle& o) const;
    // same values on a common refined modulus
    PhaseCocycle rescaled(const Int& new_modulus) const;
};

// Element of Hom(L, (1/M)Z/Z).
struct GaugeFunction {
    Int modulus = 1;
    IntVec chi;
};

// 2-cochain valued in (1/M)Z/Z with the 2-cocycle identity verified.
struct FactorSystem {
    PointGroup group;
    Int modulus = 1;
    std::vector<Int> vals;  // index g * N + h

    static FactorSystem create(const PointGroup& g, const Int& modulus,
                               std::vector<Int> values);
    Frac value(int g, int h) const;
};

// Fractional translation q with q.g - q integral for every group element;
// k(g) = q.g - q is then a lattice-valued 1-cocycle.
struct TranslationCocycle {
    PointGroup group;
    std::vector<Rat> q;

    static TranslationCocycle create(const PointGroup& g, std::vector<Rat> q);
    IntVec k(int g) const;      // q.g - q
    IntVec sigma(int g) const;  // q.g^-1 - q
    bool integral() const;      // q itself in the lattice
};

// Scalar 2-chain sum n_{g,h} [g|h] used for cap products.
struct TwoCycle {
    PointGroup group;
    std::vector<Int> n;  // index g * N + h

    static TwoCycle zero(const PointGroup& g);
    // the antisymmetric [g|h] - [h|g] for a commuting pair
    static TwoCycle commutator(const PointGroup& g, int a, int b);
};

// d(chi): g -> chi((rep(g) - I) . ), always a valid cocycle.
PhaseCocycle coboundary(const GaugeFunction& chi, const PointGroup& g);

// H^1 with explicit cocycle generators, computed over Z/M with M = #G.
// Ambient coordinates are the stacked generator values of a cocycle.
struct CohomologyStructure {
    PointGroup group;
    int rank = 0;
    Int modulus = 1;
    AbelianGroupStructure structure;
    std::vector<PhaseCocycle> generators;
    // per element, the matrix expressing v_g from the stacked generator
    // values (the spanning-tree transport)
    std::vector<IntMatrix> transport;
    // the elements whose values make up the ambient coordinates
    std::vector<int> unknown_elements;

    const std::vector<Int>& factors() const { return structure.factors; }
    Int order() const { return structure.order(); }
    bool trivial() const { return structure.trivial(); }

    // class coordinates; the input modulus must divide M
    IntVec class_of(const PhaseCocycle& phi) const;
    // cocycle with the given class coordinates
    PhaseCocycle combine(const IntVec& coords) const;
};

CohomologyStructure cohomology_classes(const LatticeModule& l);

// <phi, c> = sum_g phi_g(k_g) for a 1-cycle c; NotACycle otherwise.
Frac pair(const PhaseCocycle& phi, const Chain1& c);

// Gauge-equivalent cocycle with modulus #G, from an input of any modulus.
PhaseCocycle reduce_to_torsion(const PhaseCocycle& phi);

// Gauge-equivalent cocycle with phi_g identically zero; possible exactly
// when phi_g vanishes on the fixed vectors of g (else HypothesisFails).
PhaseCocycle normalize_gauge_at(const PhaseCocycle& phi, int g);

// (g,h) -> phi_h(q.g - q).
FactorSystem cup_sigma(const PhaseCocycle& phi, const TranslationCocycle& s);

// sum n_{g,h} (q.g - q)[h]; a 1-cycle with lattice coefficients.
Chain1 cap_sigma(const TranslationCocycle& s, const TwoCycle& c);

// pairing of a factor system with a scalar 2-cycle
Frac pair2(const FactorSystem& f, const TwoCycle& c);

struct KmCheck {
    Frac lhs, rhs;
    bool equal_up_to_sign = false;
};

// <phi, s cap c> versus <phi cup s, c>, evaluated independently.
KmCheck km_identity_check(const PhaseCocycle& phi, const TranslationCocycle& s,
                          const TwoCycle& c);

struct ExtinctionReport {
    IntVec k;
    bool extinct = false;
    int witness = -1;  // group element index
    Frac phase;        // phi_witness(k)
};

// Spots forced dark: some g fixes k while phi_g(k) is nonzero.
std::vector<ExtinctionReport> extinction_set(const PhaseCocycle& phi,
                                             const std::vector<IntVec>& k_list);

// Transport along a module automorphism f (column action) and a group
// automorphism given as an index permutation; NotEquivariant unless
// f act(g) = act(perm(g)) f for all g.
PhaseCocycle apply_automorphism(const PhaseCocycle& phi, const IntMatrix& f,
                                const std::vector<int>& perm);

// Restriction to a subgroup produced by subgroup_point_group.
PhaseCocycle restrict_cocycle(const PhaseCocycle& phi, const PointGroup& sub,
                              const std::vector<int>& embed);

// Dihedral shortcut for 2D-type lattices: factors of H^1 read off from the
// Jordan type of the mirror on L/(1-r)L over F_2; trivial unless the
// rotation order is a power of 2.
std::vector<Int> dihedral_2d_factors(const LatticeModule& l);

}  // namespace qcohom

#pragma once

#include <string>
#include <vector>

#include "qcohom/groups.hpp"

namespace qcohom {

// A point group together with the lattice it acts on.  The lattice itself
// is always Z^rank in the chosen basis; what varies is the action.  The
// optional embedding (one row per basis vector, display use only) places
// basis vectors in physical Fourier space.
struct LatticeModule {
    std::string name;
    PointGroup group;
    std::vector<std::vector<Rat>> embedding;
    // order of zeta when the basis is the cyclotomic power basis, else 0
    int cyclotomic_n = 0;

    int rank() const { return group.rank(); }
};

// The F_p vector space L / (1 - zeta)L with its residual group action.
struct CoinvariantSpace {
    Int p = 0;  // 0 when the quotient is trivial
    int dim = 0;
    // dim x r, entries in [0,p): coordinates of the image of a lattice vector
    IntMatrix projection;
    // r x dim section of the projection (lifts of the F_p basis)
    IntMatrix lift;
    // induced column-action matrices on F_p^dim, one per quotient coset,
    // aligned with SubgroupData::coset_reps
    std::vector<IntMatrix> induced;

    IntVec project(const IntVec& v) const;
};

// Coefficients of the N-th cyclotomic polynomial, ascending degree,
// computed by dividing x^N - 1 by the lower-order factors.
std::vector<Int> cyclotomic_polynomial(int n);

// Value of the N-th cyclotomic polynomial at 1: p when N is a power of the
// prime p, and 1 otherwise.
Int cyclotomic_norm_one_minus_zeta(int n);

// Rank phi(N) lattice with zeta acting through the companion matrix of the
// N-th cyclotomic polynomial; with_mirror adds complex conjugation and
// upgrades the group from C_N to D_N.
LatticeModule cyclotomic_lattice(int n, bool with_mirror);

// Named lattice from the preset directory (JSON descriptors on disk,
// resolved via QCOHOM_PRESET_DIR or the built-in default).
LatticeModule preset_lattice(const std::string& name);

// L / (1 - g)L as an F_p space, where g is rotation_element and p comes
// from the prime-power order of g.  H must be the cyclic subgroup that g
// generates.  A trivial quotient (composite order, Lemma-style unit) is a
// legal value with p = 0.
CoinvariantSpace coinvariants_mod(const LatticeModule& l, const SubgroupData& h,
                                  int rotation_element);

// Contragredient module: every rep matrix replaced by its inverse
// transpose.  Applying twice restores the original matrices.
LatticeModule dual_action(const LatticeModule& l);

// Matrix of multiplication by a unit of Z[zeta] in the power basis;
// multiplier holds ascending coefficients in zeta.  NotAUnit when the
// determinant is not +-1, NotCyclic when l is not a cyclotomic lattice.
IntMatrix scale_automorphism(const LatticeModule& l, const std::vector<Int>& multiplier);

}  // namespace qcohom

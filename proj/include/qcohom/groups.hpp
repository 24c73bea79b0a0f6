#pragma once

#include <string>
#include <vector>

#include "qcohom/exactalg.hpp"

namespace qcohom {

// Finite point group acting on L = Z^r by integer matrices.  Convention,
// fixed once for the whole library: lattice elements are row vectors and
// the action is k |-> k * rep(g) on the right, so rep(g h) = rep(g) rep(h).
// In code lattice vectors are stored as columns; act(g) = rep(g)^T gives
// the equivalent column action.
class PointGroup {
  public:
    // empty placeholder; every usable instance comes from the factories
    PointGroup() = default;

    // Closure of a labelled generating set; elements are labelled by their
    // shortlex-first word in the generators.  Throws NotFinite when the
    // closure exceeds element_cap.
    static PointGroup from_generators(const std::vector<std::string>& labels,
                                      const std::vector<IntMatrix>& mats,
                                      int element_cap = 1000);

    // Presentation-based construction for groups whose lattice action need
    // not be faithful (a mirror can act trivially on a rank-1 lattice).
    // table must be a group and reps a homomorphism; both are verified.
    static PointGroup from_table(const std::vector<std::string>& labels,
                                 const std::vector<std::vector<int>>& table,
                                 const std::vector<IntMatrix>& reps,
                                 const std::vector<int>& generators);

    int order() const { return int(labels_.size()); }
    int rank() const { return rank_; }
    int identity() const { return identity_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int i) const { return labels_[i]; }
    int index_of(const std::string& label) const;  // -1 when absent

    int mul(int i, int j) const { return table_[i][j]; }
    int inv(int i) const { return inv_[i]; }
    const IntMatrix& rep(int i) const { return rep_[i]; }   // row action
    const IntMatrix& act(int i) const { return act_[i]; }   // column action (rep^T)
    const std::vector<int>& generators() const { return gens_; }

    // k * g for a column-stored lattice vector k.
    IntVec act_on(int g, const IntVec& k) const { return act_[g].apply(k); }

    int element_order(int i) const;
    bool is_abelian() const;

  private:
    void finalize_and_verify();

    int rank_ = 0;
    int identity_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inv_;
    std::vector<IntMatrix> rep_, act_;
    std::vector<int> gens_;
};

// Cyclic group of order N generated by rep_generator; WrongOrder when the
// matrix order differs from N.
PointGroup cyclic_group(int n, const IntMatrix& rep_generator);

// Dihedral group of order 2N from a rotation and a mirror.  Verifies
// rotation^N = 1, mirror^2 = 1, mirror rotation mirror = rotation^-1 and
// names the failing relation in RelationViolation.
PointGroup dihedral_group(int n, const IntMatrix& rotation, const IntMatrix& mirror);

// Subgroup of a parent group, with normality decided exhaustively and the
// quotient table built when normal.
struct SubgroupData {
    const PointGroup* parent = nullptr;
    std::vector<bool> member;
    std::vector<int> members;  // sorted element indices
    bool normal = false;

    // Quotient data (valid when normal): coset representative indices,
    // coset index per parent element, quotient multiplication table.
    std::vector<int> coset_reps;
    std::vector<int> coset_of;
    std::vector<std::vector<int>> quotient_table;

    int order() const { return int(members.size()); }
    int quotient_order() const { return int(coset_reps.size()); }
};

SubgroupData normal_subgroup(const PointGroup& g, const std::vector<int>& members);

}  // namespace qcohom

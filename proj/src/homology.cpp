#include "qcohom/homology.hpp"

#include <algorithm>

namespace qcohom {

namespace {

IntVec flatten(const Chain1& c, int rank) {
    IntVec out;
    out.reserve(c.k.size() * rank);
    for (auto& v : c.k) out.insert(out.end(), v.begin(), v.end());
    return out;
}

Chain1 unflatten(const IntVec& v, int n, int rank) {
    Chain1 c;
    c.k.assign(n, IntVec(rank, 0));
    for (int g = 0; g < n; ++g)
        for (int i = 0; i < rank; ++i) c.k[g][i] = v[size_t(g) * rank + i];
    return c;
}

void add_to(IntVec& dst, const IntVec& src, const Int& scale = 1) {
    for (size_t i = 0; i < dst.size(); ++i) dst[i] += scale * src[i];
}

// generating set plus identity, deduplicated; the boundary image of the
// whole [g|h] table is spanned by the columns [g|s] with s in this set,
// which keeps the relation matrix small for the larger dihedral groups
std::vector<int> second_slots(const PointGroup& g) {
    std::vector<int> s = g.generators();
    s.push_back(g.identity());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace

Chain1 Chain1::zero(const PointGroup& g, int rank) {
    Chain1 c;
    c.k.assign(g.order(), IntVec(rank, 0));
    return c;
}

bool Chain1::is_zero() const {
    for (auto& v : k)
        for (auto& x : v)
            if (x != 0) return false;
    return true;
}

Chain1 Chain1::operator+(const Chain1& o) const {
    Chain1 out = *this;
    for (size_t g = 0; g < k.size(); ++g) add_to(out.k[g], o.k[g]);
    return out;
}

Chain1 Chain1::operator-(const Chain1& o) const {
    Chain1 out = *this;
    for (size_t g = 0; g < k.size(); ++g) add_to(out.k[g], o.k[g], -1);
    return out;
}

Chain2 Chain2::zero(const PointGroup& g, int rank) {
    Chain2 c;
    c.q.assign(size_t(g.order()) * g.order(), IntVec(rank, 0));
    return c;
}

IntVec boundary1(const PointGroup& g, const Chain1& c) {
    int r = int(c.k.empty() ? 0 : c.k[0].size());
    IntVec out(r, 0);
    for (int i = 0; i < g.order(); ++i) {
        add_to(out, g.act_on(i, c.k[i]));
        add_to(out, c.k[i], -1);
    }
    return out;
}

Chain1 boundary2(const PointGroup& g, const Chain2& c) {
    int n = g.order();
    int r = int(c.q.empty() ? 0 : c.q[0].size());
    Chain1 out = Chain1::zero(g, r);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const IntVec& q = c.q[size_t(a) * n + b];
            add_to(out.k[b], g.act_on(a, q));
            add_to(out.k[g.mul(a, b)], q, -1);
            add_to(out.k[a], q);
        }
    return out;
}

HomologyStructure h1_bar(const LatticeModule& l) {
    const PointGroup& g = l.group;
    int n = g.order(), r = l.rank();

    IntMatrix b1(r, n * r);
    for (int e = 0; e < n; ++e) {
        IntMatrix blk = g.act(e) - IntMatrix::identity(r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) b1(i, e * r + j) = blk(i, j);
    }
    IntMatrix cycles = kernel_basis(b1);

    auto slots = second_slots(g);
    IntMatrix rel(n * r, int(n * slots.size() * r));
    int col = 0;
    for (int a = 0; a < n; ++a)
        for (int s : slots)
            for (int i = 0; i < r; ++i, ++col) {
                // boundary of e_i[a|s]
                IntVec moved = g.act(a).col(i);
                for (int x = 0; x < r; ++x) rel(s * r + x, col) += moved[x];
                rel(g.mul(a, s) * r + i, col) -= 1;
                rel(a * r + i, col) += 1;
            }

    HomologyStructure h;
    h.group = g;
    h.rank = r;
    h.structure = quotient_structure(cycles, rel);
    for (size_t j = 0; j < h.structure.factors.size(); ++j)
        h.generators.push_back(unflatten(h.structure.generator_ambient.col(int(j)), n, r));
    return h;
}

HomologyStructure h1_cyclic(const LatticeModule& l, int generator) {
    const PointGroup& g = l.group;
    int n = g.order(), r = l.rank();
    if (g.element_order(generator) != n)
        throw NotCyclic("group is not generated by the given element");

    IntMatrix a = g.act(generator);
    IntMatrix fixed = kernel_basis(a - IntMatrix::identity(r));
    IntMatrix norm(r, r);  // 1 + a + ... + a^(n-1)
    IntMatrix pw = IntMatrix::identity(r);
    for (int j = 0; j < n; ++j) {
        norm = norm + pw;
        pw = pw * a;
    }

    HomologyStructure h;
    h.group = g;
    h.rank = r;
    h.cyclic_generator = generator;
    h.structure = quotient_structure(fixed, norm);
    for (size_t j = 0; j < h.structure.factors.size(); ++j) {
        Chain1 c = Chain1::zero(g, r);
        c.k[generator] = h.structure.generator_ambient.col(int(j));
        h.generators.push_back(c);
    }
    return h;
}

IntVec HomologyStructure::class_of(const Chain1& c) const {
    IntVec b = boundary1(group, c);
    for (auto& x : b)
        if (x != 0) throw NotACycle("chain has nonzero boundary");

    if (cyclic_generator < 0) {
        auto coords = structure.coords_of(flatten(c, rank));
        if (!coords) throw NotACycle("cycle outside the computed kernel");
        return *coords;
    }

    // comparison with the small resolution: k[r^j] is homologous to
    // (k + k.r + ... + k.r^(j-1))[r]
    IntMatrix a = group.act(cyclic_generator);
    IntVec total(rank, 0);
    for (int e = 0; e < group.order(); ++e) {
        // power of the generator giving e
        int j = 0, cur = group.identity();
        while (cur != e) {
            cur = group.mul(cur, cyclic_generator);
            ++j;
        }
        IntVec v = c.k[e];
        for (int step = 0; step < j; ++step) {
            add_to(total, v);
            v = a.apply(v);
        }
        // the j-th partial sum applied in reverse order equals
        // sum_{i<j} a^i k, since a^i k enters once per step
    }
    auto coords = structure.coords_of(total);
    if (!coords) throw NotACycle("cycle outside the fixed sublattice");
    return *coords;
}

AbelianGroupStructure dual_structure(const AbelianGroupStructure& s) {
    int k = int(s.factors.size());
    IntMatrix rel(k, k);
    for (int i = 0; i < k; ++i) {
        if (s.factors[i] == 0) throw InfiniteFactor("free factor has no finite dual");
        rel(i, i) = s.factors[i];
    }
    return quotient_structure(IntMatrix::identity(k), rel);
}

namespace {

// H1 of a finite group (given by a table) with coefficients in a finitely
// generated abelian group: coordinates mod a diagonal relation lattice,
// with a column action per group element.
AbelianGroupStructure h1_with_coefficients(const std::vector<std::vector<int>>& table,
                                           const std::vector<int>& gen_slots,
                                           const std::vector<Int>& factors,
                                           const std::vector<IntMatrix>& action) {
    int nq = int(table.size());
    int m = int(factors.size());

    // relation lattice inside the coefficient space
    std::vector<int> finite_idx;
    for (int i = 0; i < m; ++i)
        if (factors[i] != 0) finite_idx.push_back(i);
    IntMatrix dcoeff(m, int(finite_idx.size()));
    for (size_t t = 0; t < finite_idx.size(); ++t)
        dcoeff(finite_idx[t], int(t)) = factors[finite_idx[t]];

    IntMatrix b1(m, nq * m);
    for (int e = 0; e < nq; ++e) {
        IntMatrix blk = action[e] - IntMatrix::identity(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) b1(i, e * m + j) = blk(i, j);
    }

    // cycles mod the lattice: x-part of the kernel of [B1 | D]
    IntMatrix aug = b1.hcat(dcoeff);
    IntMatrix kfull = kernel_basis(aug);
    std::vector<int> xrows(nq * m);
    for (int i = 0; i < nq * m; ++i) xrows[i] = i;
    IntMatrix cycles = kfull.submatrix_rows(xrows);

    // boundaries from [a|s] columns plus the relation lattice per slot
    int nrel = nq * int(gen_slots.size()) * m + nq * int(finite_idx.size());
    IntMatrix rel(nq * m, nrel);
    int col = 0;
    for (int a = 0; a < nq; ++a)
        for (int s : gen_slots)
            for (int i = 0; i < m; ++i, ++col) {
                IntVec moved = action[a].col(i);
                for (int x = 0; x < m; ++x) rel(s * m + x, col) += moved[x];
                rel(table[a][s] * m + i, col) -= 1;
                rel(a * m + i, col) += 1;
            }
    for (int e = 0; e < nq; ++e)
        for (int i : finite_idx) {
            rel(e * m + i, col) = factors[i];
            ++col;
        }
    return quotient_structure(cycles, rel);
}

}  // namespace

CoinvariantQuotientMap coinvariant_quotient_map(const LatticeModule& l,
                                                const SubgroupData& h) {
    if (!h.normal) throw NotNormal("the quotient map needs a normal subgroup");
    const PointGroup& g = l.group;
    int r = l.rank();

    CoinvariantQuotientMap out;
    out.source = h1_bar(l);
    out.coset_of = h.coset_of;
    out.quotient_order = h.quotient_order();

    // coinvariant coefficient module L / <k.x - k : x in H>
    IntMatrix span(r, int(h.members.size()) * r);
    for (size_t t = 0; t < h.members.size(); ++t) {
        IntMatrix blk = g.act(h.members[t]) - IntMatrix::identity(r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) span(i, int(t) * r + j) = blk(i, j);
    }
    auto coeff = quotient_structure(IntMatrix::identity(r), span);
    int m = int(coeff.factors.size());
    out.coeff_projection = coeff.to_classes;

    std::vector<IntMatrix> action;
    for (int c = 0; c < out.quotient_order; ++c)
        action.push_back(coeff.to_classes * g.act(h.coset_reps[c]) * coeff.generator_ambient);

    // quotient generating set: images of the parent generators
    std::vector<int> slots;
    for (int s : g.generators()) slots.push_back(h.coset_of[s]);
    slots.push_back(h.coset_of[g.identity()]);
    std::sort(slots.begin(), slots.end());
    slots.erase(std::unique(slots.begin(), slots.end()), slots.end());

    out.target = h1_with_coefficients(h.quotient_table, slots, coeff.factors, action);

    int src_gens = int(out.source.factors().size());
    int tgt_gens = int(out.target.factors.size());
    out.matrix = IntMatrix(tgt_gens, src_gens);
    for (int j = 0; j < src_gens; ++j) {
        IntVec coords = out.map_cycle(out.source.generators[j]);
        for (int i = 0; i < tgt_gens; ++i) out.matrix(i, j) = coords[i];
    }

    // surjectivity: every target generator reachable modulo the factors
    out.surjective = true;
    IntMatrix probe = out.matrix;
    IntMatrix dm(tgt_gens, tgt_gens);
    for (int i = 0; i < tgt_gens; ++i) dm(i, i) = out.target.factors[i];
    IntMatrix full = probe.hcat(dm);
    for (int i = 0; i < tgt_gens && out.surjective; ++i) {
        IntVec e(tgt_gens, 0);
        e[i] = 1;
        out.surjective = solve(full, e).has_value();
    }
    (void)m;
    return out;
}

IntVec CoinvariantQuotientMap::map_cycle(const Chain1& c) const {
    IntVec b = boundary1(source.group, c);
    for (auto& x : b)
        if (x != 0) throw NotACycle("chain has nonzero boundary");

    int m = coeff_projection.rows();
    std::vector<IntVec> pushed(quotient_order, IntVec(m, 0));
    for (size_t g = 0; g < c.k.size(); ++g)
        add_to(pushed[coset_of[g]], coeff_projection.apply(c.k[g]));
    IntVec flat;
    for (auto& v : pushed) flat.insert(flat.end(), v.begin(), v.end());
    auto coords = target.coords_of(flat);
    if (!coords) throw NotACycle("image is outside the target cycle space");
    return *coords;
}

}  // namespace qcohom

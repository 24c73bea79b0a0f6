#include "qcohom/phases.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace qcohom {

namespace {

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec vec_mod(IntVec v, const Int& m) {
    for (auto& x : v) x = int_mod(x, m);
    return v;
}

IntVec add_scaled(IntVec a, const IntVec& b, const Int& s) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}

bool same_group(const PointGroup& a, const PointGroup& b) {
    if (a.order() != b.order() || a.rank() != b.rank()) return false;
    for (int i = 0; i < a.order(); ++i) {
        if (a.rep(i) != b.rep(i)) return false;
        for (int j = 0; j < a.order(); ++j)
            if (a.mul(i, j) != b.mul(i, j)) return false;
    }
    return true;
}

}  // namespace

PointGroup subgroup_point_group(const PointGroup& parent, const std::vector<int>& members,
                                std::vector<int>* embed) {
    std::vector<int> mem = members;
    std::sort(mem.begin(), mem.end());
    mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
    if (mem.empty() || mem.front() < 0 || mem.back() >= parent.order())
        throw NotSubgroup("member indices out of range");

    std::vector<int> local(parent.order(), -1);
    for (size_t i = 0; i < mem.size(); ++i) local[mem[i]] = int(i);
    if (local[parent.identity()] < 0) throw NotSubgroup("identity missing");
    for (int a : mem) {
        if (local[parent.inv(a)] < 0) throw NotSubgroup("not closed under inverse");
        for (int b : mem)
            if (local[parent.mul(a, b)] < 0) throw NotSubgroup("not closed under product");
    }

    int n = int(mem.size());
    std::vector<std::string> labels;
    std::vector<IntMatrix> reps;
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
        labels.push_back(parent.label(mem[i]));
        reps.push_back(parent.rep(mem[i]));
        for (int j = 0; j < n; ++j) table[i][j] = local[parent.mul(mem[i], mem[j])];
    }

    // greedy small generating set, so downstream transports stay compact
    std::vector<int> gens;
    std::vector<bool> reached(n, false);
    reached[local[parent.identity()]] = true;
    int count = 1;
    for (int i = 0; i < n && count < n; ++i) {
        if (reached[i]) continue;
        gens.push_back(i);
        // closure of the current generating set
        std::fill(reached.begin(), reached.end(), false);
        reached[local[parent.identity()]] = true;
        count = 1;
        std::deque<int> queue = {local[parent.identity()]};
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int s : gens) {
                int y = table[x][s];
                if (!reached[y]) {
                    reached[y] = true;
                    ++count;
                    queue.push_back(y);
                }
            }
        }
    }
    if (gens.empty()) gens.push_back(local[parent.identity()]);

    if (embed) *embed = mem;
    return PointGroup::from_table(labels, table, reps, gens);
}

PhaseCocycle PhaseCocycle::create(const PointGroup& g, const Int& modulus,
                                  std::vector<IntVec> values) {
    if (modulus < 1) throw MalformedInput("modulus must be positive");
    if (int(values.size()) != g.order()) throw MalformedInput("one value vector per element");
    for (auto& v : values) {
        if (int(v.size()) != g.rank()) throw MalformedInput("value length must match rank");
        v = vec_mod(std::move(v), modulus);
    }
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            IntVec want = add_scaled(values[a], g.rep(a).apply(values[b]), 1);
            IntVec have = values[g.mul(a, b)];
            for (int i = 0; i < g.rank(); ++i)
                if (int_mod(want[i] - have[i], modulus) != 0)
                    throw NotACocycle("cocycle law fails at " + g.label(a) + ", " +
                                      g.label(b));
        }
    PhaseCocycle p;
    p.group = g;
    p.modulus = modulus;
    p.v = std::move(values);
    return p;
}

PhaseCocycle PhaseCocycle::zero(const PointGroup& g, int rank) {
    PhaseCocycle p;
    p.group = g;
    p.modulus = 1;
    p.v.assign(g.order(), IntVec(rank, 0));
    return p;
}

Frac PhaseCocycle::eval(int g, const IntVec& k) const { return Frac(dot(k, v[g]), modulus); }

PhaseCocycle PhaseCocycle::rescaled(const Int& new_modulus) const {
    if (new_modulus % modulus != 0)
        throw MalformedInput("refined modulus must be a multiple of the old one");
    Int f = new_modulus / modulus;
    PhaseCocycle p = *this;
    p.modulus = new_modulus;
    for (auto& w : p.v)
        for (auto& x : w) x *= f;
    return p;
}

PhaseCocycle PhaseCocycle::operator+(const PhaseCocycle& o) const {
    Int m = boost::multiprecision::lcm(modulus, o.modulus);
    PhaseCocycle a = rescaled(m), b = o.rescaled(m);
    for (size_t g = 0; g < a.v.size(); ++g)
        a.v[g] = vec_mod(add_scaled(a.v[g], b.v[g], 1), m);
    return a;
}

PhaseCocycle PhaseCocycle::operator-(const PhaseCocycle& o) const {
    Int m = boost::multiprecision::lcm(modulus, o.modulus);
    PhaseCocycle a = rescaled(m), b = o.rescaled(m);
    for (size_t g = 0; g < a.v.size(); ++g)
        a.v[g] = vec_mod(add_scaled(a.v[g], b.v[g], -1), m);
    return a;
}

FactorSystem FactorSystem::create(const PointGroup& g, const Int& modulus,
                                  std::vector<Int> values) {
    int n = g.order();
    if (modulus < 1) throw MalformedInput("modulus must be positive");
    if (values.size() != size_t(n) * n) throw MalformedInput("one value per ordered pair");
    for (auto& x : values) x = int_mod(x, modulus);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                Int d = values[size_t(b) * n + c] - values[size_t(g.mul(a, b)) * n + c] +
                        values[size_t(a) * n + g.mul(b, c)] - values[size_t(a) * n + b];
                if (int_mod(d, modulus) != 0)
                    throw NotACocycle("2-cocycle identity fails at " + g.label(a) + ", " +
                                      g.label(b) + ", " + g.label(c));
            }
    FactorSystem f;
    f.group = g;
    f.modulus = modulus;
    f.vals = std::move(values);
    return f;
}

Frac FactorSystem::value(int g, int h) const {
    return Frac(vals[size_t(g) * group.order() + h], modulus);
}

TranslationCocycle TranslationCocycle::create(const PointGroup& g, std::vector<Rat> q) {
    if (int(q.size()) != g.rank()) throw MalformedInput("translation length must match rank");
    TranslationCocycle t;
    t.group = g;
    t.q = std::move(q);
    for (int e = 0; e < g.order(); ++e) t.k(e);  // integrality check
    return t;
}

IntVec TranslationCocycle::k(int g) const {
    const IntMatrix& a = group.act(g);
    IntVec out(q.size(), 0);
    for (size_t i = 0; i < q.size(); ++i) {
        Rat s = -q[i];
        for (size_t j = 0; j < q.size(); ++j) s += Rat(a(int(i), int(j))) * q[j];
        if (boost::multiprecision::denominator(s) != 1)
            throw NonIntegralCoefficients("q." + group.label(g) + " - q is not integral");
        out[i] = boost::multiprecision::numerator(s);
    }
    return out;
}

IntVec TranslationCocycle::sigma(int g) const { return k(group.inv(g)); }

bool TranslationCocycle::integral() const {
    for (auto& x : q)
        if (boost::multiprecision::denominator(x) != 1) return false;
    return true;
}

TwoCycle TwoCycle::zero(const PointGroup& g) {
    TwoCycle c;
    c.group = g;
    c.n.assign(size_t(g.order()) * g.order(), 0);
    return c;
}

TwoCycle TwoCycle::commutator(const PointGroup& g, int a, int b) {
    if (g.mul(a, b) != g.mul(b, a))
        throw NotA2Cycle("commutator chain needs a commuting pair");
    TwoCycle c = zero(g);
    c.n[size_t(a) * g.order() + b] += 1;
    c.n[size_t(b) * g.order() + a] -= 1;
    return c;
}

PhaseCocycle coboundary(const GaugeFunction& chi, const PointGroup& g) {
    if (int(chi.chi.size()) != g.rank())
        throw MalformedInput("gauge length must match rank");
    std::vector<IntVec> vals;
    for (int e = 0; e < g.order(); ++e)
        vals.push_back((g.rep(e) - IntMatrix::identity(g.rank())).apply(chi.chi));
    return PhaseCocycle::create(g, chi.modulus, std::move(vals));
}

CohomologyStructure cohomology_classes(const LatticeModule& l) {
    const PointGroup& g = l.group;
    int n = g.order(), r = l.rank();

    CohomologyStructure out;
    out.group = g;
    out.rank = r;
    out.modulus = n;

    std::vector<int> gens;
    for (int s : g.generators())
        if (s != g.identity()) gens.push_back(s);
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    out.unknown_elements = gens;

    if (n == 1) {
        out.modulus = 1;
        out.structure = quotient_structure(IntMatrix::identity(0), IntMatrix::identity(0));
        out.transport.assign(1, IntMatrix::zero(r, 0));
        return out;
    }

    int ng = int(gens.size());
    int u = ng * r;
    Int m = n;

    // spanning-tree transport: v_e as a linear function of the stacked
    // generator values, with one block of constraints per non-tree edge
    std::vector<IntMatrix> tr(n);
    std::vector<bool> seen(n, false);
    tr[g.identity()] = IntMatrix::zero(r, u);
    seen[g.identity()] = true;
    std::deque<int> order = {g.identity()};
    std::vector<IntVec> constraint_rows;
    for (size_t head = 0; head < order.size(); ++head) {
        int e = order[head];
        for (int i = 0; i < ng; ++i) {
            int t = g.mul(e, gens[i]);
            IntMatrix cand = tr[e];
            const IntMatrix& re = g.rep(e);
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b) cand(a, i * r + b) += re(a, b);
            if (!seen[t]) {
                seen[t] = true;
                tr[t] = std::move(cand);
                order.push_back(t);
            } else {
                IntMatrix diff = cand - tr[t];
                for (int a = 0; a < r; ++a) {
                    IntVec row = diff.row(a);
                    bool nz = false;
                    for (auto& x : row) nz |= x != 0;
                    if (nz) constraint_rows.push_back(std::move(row));
                }
            }
        }
    }
    for (int e = 0; e < n; ++e)
        if (!seen[e]) throw MalformedInput("listed generators do not generate the group");

    int nc = int(constraint_rows.size());
    IntMatrix aug(nc, u + nc);
    for (int i = 0; i < nc; ++i) {
        for (int j = 0; j < u; ++j) aug(i, j) = constraint_rows[i][j];
        aug(i, u + i) = m;
    }
    IntMatrix kfull = kernel_basis(aug);
    std::vector<int> xrows(u);
    std::iota(xrows.begin(), xrows.end(), 0);
    IntMatrix cocycles = nc == 0 ? IntMatrix::identity(u) : kfull.submatrix_rows(xrows);

    // Coboundaries.  A gauge may have any denominator, so the relation
    // lattice is the saturation of the stacked (rep(g) - I) image: a gauge
    // x / (M K) gives the value vector (A x) / K, integral exactly when it
    // lies in the saturation.  The saturated basis comes from the unimodular
    // row transform of the Smith form; restrict it to the generator slots.
    IntMatrix afull(n * r, r);
    for (int e = 0; e < n; ++e) {
        IntMatrix blk = g.rep(e) - IntMatrix::identity(r);
        for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) afull(e * r + a, b) = blk(a, b);
    }
    auto asnf = smith_normal_form(afull);
    int arank = asnf.rank();
    std::vector<int> satcols(arank);
    std::iota(satcols.begin(), satcols.end(), 0);
    IntMatrix sat = asnf.u_inv.submatrix_cols(satcols);
    std::vector<int> genrows;
    for (int i = 0; i < ng; ++i)
        for (int a = 0; a < r; ++a) genrows.push_back(gens[i] * r + a);
    IntMatrix satgen = sat.submatrix_rows(genrows);

    IntMatrix rel(u, arank + u);
    for (int i = 0; i < u; ++i) {
        for (int j = 0; j < arank; ++j) rel(i, j) = satgen(i, j);
        rel(i, arank + i) = m;
    }

    out.structure = quotient_structure(cocycles, rel);
    out.transport = std::move(tr);

    for (size_t j = 0; j < out.structure.factors.size(); ++j) {
        IntVec uvec = vec_mod(out.structure.generator_ambient.col(int(j)), m);
        std::vector<IntVec> vals;
        for (int e = 0; e < n; ++e) vals.push_back(out.transport[e].apply(uvec));
        out.generators.push_back(PhaseCocycle::create(g, m, std::move(vals)));
    }
    return out;
}

IntVec CohomologyStructure::class_of(const PhaseCocycle& phi) const {
    if (!same_group(phi.group, group))
        throw MalformedInput("cocycle belongs to a different group");
    PhaseCocycle p = phi;
    if (p.modulus != modulus)
        p = modulus % p.modulus == 0 ? p.rescaled(modulus) : reduce_to_torsion(p);
    IntVec u;
    for (int s : unknown_elements) u.insert(u.end(), p.v[s].begin(), p.v[s].end());
    if (unknown_elements.empty()) return IntVec(structure.factors.size(), 0);
    auto coords = structure.coords_of(u);
    if (!coords) throw NotACocycle("values escape the computed cocycle span");
    return *coords;
}

PhaseCocycle CohomologyStructure::combine(const IntVec& coords) const {
    if (coords.size() != structure.factors.size())
        throw MalformedInput("one coordinate per invariant factor");
    int u = structure.generator_ambient.rows();
    IntVec w(u, 0);
    for (size_t j = 0; j < coords.size(); ++j)
        w = add_scaled(std::move(w), structure.generator_ambient.col(int(j)), coords[j]);
    w = vec_mod(std::move(w), modulus);
    std::vector<IntVec> vals;
    for (int e = 0; e < group.order(); ++e)
        vals.push_back(transport[e].apply(w));
    return PhaseCocycle::create(group, modulus, std::move(vals));
}

Frac pair(const PhaseCocycle& phi, const Chain1& c) {
    IntVec b = boundary1(phi.group, c);
    for (auto& x : b)
        if (x != 0) throw NotACycle("chain has nonzero boundary");
    Int s = 0;
    for (int g = 0; g < phi.group.order(); ++g) s += dot(c.k[g], phi.v[g]);
    return Frac(s, phi.modulus);
}

PhaseCocycle reduce_to_torsion(const PhaseCocycle& phi) {
    const PointGroup& g = phi.group;
    Int n = g.order(), m0 = phi.modulus;
    int r = g.rank();

    IntVec chi(r, 0);
    for (auto& w : phi.v) chi = add_scaled(std::move(chi), w, 1);

    std::vector<IntVec> vals;
    for (int e = 0; e < g.order(); ++e) {
        IntVec num = (g.rep(e) - IntMatrix::identity(r)).apply(chi);
        num = add_scaled(std::move(num), phi.v[e], n);
        for (auto& x : num) {
            if (x % m0 != 0) throw NotACocycle("averaging trick failed on a non-cocycle");
            x /= m0;
        }
        vals.push_back(std::move(num));
    }
    return PhaseCocycle::create(g, n, std::move(vals));
}

PhaseCocycle normalize_gauge_at(const PhaseCocycle& phi, int g) {
    const PointGroup& gr = phi.group;
    int r = gr.rank();
    Int m = phi.modulus;

    IntMatrix a = gr.rep(g) - IntMatrix::identity(r);
    auto s = smith_normal_form(a);
    IntVec ub = s.u.apply(phi.v[g]);

    Int lsc = 1;
    for (int i = 0; i < r; ++i) {
        Int d = s.d(i, i);
        if (d != 0) lsc = boost::multiprecision::lcm(lsc, d);
        else if (int_mod(ub[i], m) != 0)
            throw HypothesisFails("phase does not vanish on the fixed vectors of " +
                                  gr.label(g));
    }

    IntVec y(r, 0);
    for (int i = 0; i < r; ++i)
        if (s.d(i, i) != 0) y[i] = ub[i] * (lsc / s.d(i, i));
    IntVec chi = s.v.apply(y);

    Int m2 = m * lsc;
    std::vector<IntVec> vals;
    for (int e = 0; e < gr.order(); ++e) {
        IntVec w = (gr.rep(e) - IntMatrix::identity(r)).apply(chi);
        for (int i = 0; i < r; ++i) w[i] = phi.v[e][i] * lsc - w[i];
        vals.push_back(vec_mod(std::move(w), m2));
    }
    for (auto& x : vals[g])
        if (x != 0) throw HypothesisFails("gauge construction failed to cancel the value");
    return PhaseCocycle::create(gr, m2, std::move(vals));
}

FactorSystem cup_sigma(const PhaseCocycle& phi, const TranslationCocycle& s) {
    if (!same_group(phi.group, s.group))
        throw MalformedInput("cup factors live on different groups");
    const PointGroup& g = phi.group;
    int n = g.order();
    std::vector<Int> vals(size_t(n) * n, 0);
    for (int a = 0; a < n; ++a) {
        IntVec ka = s.k(a);
        for (int b = 0; b < n; ++b)
            vals[size_t(a) * n + b] = int_mod(dot(ka, phi.v[b]), phi.modulus);
    }
    return FactorSystem::create(g, phi.modulus, std::move(vals));
}

Chain1 cap_sigma(const TranslationCocycle& s, const TwoCycle& c) {
    if (!same_group(s.group, c.group))
        throw MalformedInput("cap factors live on different groups");
    const PointGroup& g = s.group;
    int n = g.order();

    std::vector<Int> scalar_boundary(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const Int& w = c.n[size_t(a) * n + b];
            if (w == 0) continue;
            scalar_boundary[b] += w;
            scalar_boundary[g.mul(a, b)] -= w;
            scalar_boundary[a] += w;
        }
    for (auto& x : scalar_boundary)
        if (x != 0) throw NotA2Cycle("scalar 2-chain has nonzero boundary");

    Chain1 out = Chain1::zero(g, g.rank());
    for (int a = 0; a < n; ++a) {
        IntVec ka = s.k(a);
        for (int b = 0; b < n; ++b) {
            const Int& w = c.n[size_t(a) * n + b];
            if (w != 0) out.k[b] = add_scaled(std::move(out.k[b]), ka, w);
        }
    }
    IntVec bd = boundary1(g, out);
    for (auto& x : bd)
        if (x != 0) throw NotA2Cycle("cap image failed to close up");
    return out;
}

Frac pair2(const FactorSystem& f, const TwoCycle& c) {
    if (!same_group(f.group, c.group))
        throw MalformedInput("pairing factors live on different groups");
    int n = f.group.order();
    Int s = 0;
    for (size_t i = 0; i < size_t(n) * n; ++i) s += c.n[i] * f.vals[i];
    return Frac(s, f.modulus);
}

KmCheck km_identity_check(const PhaseCocycle& phi, const TranslationCocycle& s,
                          const TwoCycle& c) {
    KmCheck out;
    out.lhs = pair(phi, cap_sigma(s, c));
    out.rhs = pair2(cup_sigma(phi, s), c);
    out.equal_up_to_sign = out.lhs == out.rhs || out.lhs == out.rhs.negated();
    return out;
}

std::vector<ExtinctionReport> extinction_set(const PhaseCocycle& phi,
                                             const std::vector<IntVec>& k_list) {
    const PointGroup& g = phi.group;
    std::vector<ExtinctionReport> out;
    for (auto& k : k_list) {
        ExtinctionReport rep;
        rep.k = k;
        for (int e = 0; e < g.order() && !rep.extinct; ++e) {
            if (g.act_on(e, k) != k) continue;
            Frac p = phi.eval(e, k);
            if (!p.is_zero()) {
                rep.extinct = true;
                rep.witness = e;
                rep.phase = p;
            }
        }
        out.push_back(std::move(rep));
    }
    return out;
}

PhaseCocycle apply_automorphism(const PhaseCocycle& phi, const IntMatrix& f,
                                const std::vector<int>& perm) {
    const PointGroup& g = phi.group;
    int n = g.order();
    if (int(perm.size()) != n) throw MalformedInput("permutation length must match order");
    std::vector<bool> hit(n, false);
    for (int x : perm) {
        if (x < 0 || x >= n || hit[x]) throw MalformedInput("not a permutation");
        hit[x] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b]))
                throw MalformedInput("permutation is not a group automorphism");
    for (int e = 0; e < n; ++e)
        if (f * g.act(e) != g.act(perm[e]) * f)
            throw NotEquivariant("module map does not intertwine " + g.label(e));

    std::vector<IntVec> vals;
    for (int e = 0; e < n; ++e) vals.push_back(f.apply_transposed(phi.v[perm[e]]));
    return PhaseCocycle::create(g, phi.modulus, std::move(vals));
}

PhaseCocycle restrict_cocycle(const PhaseCocycle& phi, const PointGroup& sub,
                              const std::vector<int>& embed) {
    if (embed.size() != size_t(sub.order()))
        throw MalformedInput("one parent index per subgroup element");
    std::vector<IntVec> vals;
    for (int i = 0; i < sub.order(); ++i) {
        int p = embed[i];
        if (p < 0 || p >= phi.group.order()) throw MalformedInput("embedding out of range");
        if (sub.rep(i) != phi.group.rep(p))
            throw MalformedInput("subgroup representation disagrees with the parent");
        vals.push_back(phi.v[p]);
    }
    return PhaseCocycle::create(sub, phi.modulus, std::move(vals));
}

std::vector<Int> dihedral_2d_factors(const LatticeModule& l) {
    const PointGroup& g = l.group;
    if (g.generators().size() < 2)
        throw MalformedInput("expected a rotation and a mirror generator");
    int rot = g.generators()[0], mir = g.generators()[1];
    int n0 = g.element_order(rot);
    if (n0 < 2 || g.order() != 2 * n0 || g.element_order(mir) != 2 ||
        g.mul(mir, g.mul(rot, mir)) != g.inv(rot))
        throw RelationViolation("group is not dihedral on the chosen generators");

    // trivial unless the rotation order is a power of 2
    int n = n0;
    while (n % 2 == 0) n /= 2;
    if (n != 1) return {};

    std::vector<int> powers = {g.identity()};
    for (int cur = rot; cur != g.identity(); cur = g.mul(cur, rot)) powers.push_back(cur);
    auto h = normal_subgroup(g, powers);
    auto cs = coinvariants_mod(l, h, rot);
    if (cs.p == 0 || cs.dim == 0) return {};
    if (cs.p != 2) return {};

    F2Matrix mm = F2Matrix::from_int(cs.induced[h.coset_of[mir]]);
    auto counts = f2_jordan_counts(mm);
    return std::vector<Int>(size_t(counts.first), Int(2));
}

}  // namespace qcohom

#include "qcohom/lattices.hpp"

#include <algorithm>

namespace qcohom {

namespace {

// polynomials as ascending coefficient vectors over Z

std::vector<Int> poly_trim(std::vector<Int> p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

// exact division, divisor monic
std::vector<Int> poly_div(std::vector<Int> num, const std::vector<Int>& den) {
    int dn = int(num.size()) - 1, dd = int(den.size()) - 1;
    std::vector<Int> q(dn - dd + 1, 0);
    for (int i = dn - dd; i >= 0; --i) {
        Int c = num[i + dd];
        q[i] = c;
        for (int j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
    }
    for (auto& c : num)
        if (c != 0) throw MalformedInput("inexact polynomial division");
    return q;
}

// ascending coefficients of p * q mod the monic modulus
std::vector<Int> poly_mulmod(const std::vector<Int>& p, const std::vector<Int>& q,
                             const std::vector<Int>& mod) {
    int dm = int(mod.size()) - 1;
    std::vector<Int> prod(p.size() + q.size() - 1, 0);
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) prod[i + j] += p[i] * q[j];
    for (int i = int(prod.size()) - 1; i >= dm; --i) {
        Int c = prod[i];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) prod[i - dm + j] -= c * mod[j];
    }
    prod.resize(dm, 0);
    return prod;
}

IntMatrix companion(const std::vector<Int>& monic) {
    int r = int(monic.size()) - 1;
    IntMatrix c(r, r);
    for (int j = 0; j + 1 < r; ++j) c(j + 1, j) = 1;
    for (int i = 0; i < r; ++i) c(i, r - 1) = -monic[i];
    return c;
}

// N = p^e?  returns p, or 0 when composite
Int prime_power_base(int n) {
    if (n < 2) return 0;
    int p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (p * p > n) p = n;
    while (n % p == 0) n /= p;
    return n == 1 ? Int(p) : Int(0);
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(int n) {
    if (n < 1) throw MalformedInput("cyclotomic order must be positive");
    // x^n - 1 divided by the product of all lower-order factors
    std::vector<Int> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) num = poly_trim(poly_div(num, cyclotomic_polynomial(d)));
    return num;
}

Int cyclotomic_norm_one_minus_zeta(int n) {
    if (n < 2) throw MalformedInput("order must be at least 2");
    Int v = 0;
    for (auto& c : cyclotomic_polynomial(n)) v += c;
    return v;
}

LatticeModule cyclotomic_lattice(int n, bool with_mirror) {
    if (n < 2) throw MalformedInput("order must be at least 2");
    auto f = cyclotomic_polynomial(n);
    int r = int(f.size()) - 1;
    IntMatrix rot = companion(f);

    LatticeModule l;
    l.cyclotomic_n = n;
    if (!with_mirror) {
        l.name = "C" + std::to_string(n);
        l.group = cyclic_group(n, rot);
        return l;
    }

    // conjugation in the power basis: column j holds zeta^(-j) reduced
    std::vector<Int> zeta(2, 0);
    zeta[1] = 1;
    std::vector<std::vector<Int>> pw(n);  // pw[k] = zeta^k reduced
    pw[0] = std::vector<Int>(r, 0);
    pw[0][0] = 1;
    for (int k = 1; k < n; ++k) pw[k] = poly_mulmod(pw[k - 1], zeta, f);
    IntMatrix mir(r, r);
    for (int j = 0; j < r; ++j) mir.set_col(j, pw[(n - j) % n]);

    l.name = "D" + std::to_string(n);
    l.group = dihedral_group(n, rot, mir);
    return l;
}

CoinvariantSpace coinvariants_mod(const LatticeModule& l, const SubgroupData& h,
                                  int rotation_element) {
    const PointGroup& g = l.group;
    // h must be exactly the powers of the rotation
    std::vector<bool> powers(g.order(), false);
    int cur = rotation_element, n = 0;
    do {
        powers[cur] = true;
        cur = g.mul(cur, rotation_element);
        ++n;
    } while (cur != rotation_element);
    if (!powers[g.identity()]) throw NotCyclic("element powers do not close");
    n = g.element_order(rotation_element);
    for (int i = 0; i < g.order(); ++i)
        if (powers[i] != h.member[i])
            throw NotCyclic("subgroup is not generated by the given element");
    if (!h.normal) throw NotNormal("coinvariant action needs a normal subgroup");

    CoinvariantSpace cs;
    cs.p = prime_power_base(n);
    if (cs.p == 0) return cs;  // the ideal is generated by a unit

    int r = l.rank();
    IntMatrix b = g.act(rotation_element) - IntMatrix::identity(r);
    auto q = quotient_structure(IntMatrix::identity(r), b);
    for (auto& f : q.factors)
        if (f != cs.p)
            throw MalformedInput("coinvariant quotient is not an F_p space");
    cs.dim = int(q.factors.size());
    if (cs.dim == 0) {
        cs.p = 0;
        return cs;
    }

    cs.projection = q.to_classes;
    for (int i = 0; i < cs.projection.rows(); ++i)
        for (int j = 0; j < cs.projection.cols(); ++j)
            cs.projection(i, j) = int_mod(cs.projection(i, j), cs.p);
    cs.lift = q.generator_ambient;

    auto modp = [&](IntMatrix m) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m(i, j) = int_mod(m(i, j), cs.p);
        return m;
    };
    if (!modp(cs.projection * cs.lift).is_identity())
        throw MalformedInput("projection section mismatch");

    for (int c = 0; c < h.quotient_order(); ++c)
        cs.induced.push_back(modp(cs.projection * g.act(h.coset_reps[c]) * cs.lift));
    // induced matrices must satisfy the quotient relations; column actions
    // compose in reverse
    for (int a = 0; a < h.quotient_order(); ++a)
        for (int b2 = 0; b2 < h.quotient_order(); ++b2)
            if (!(modp(cs.induced[a] * cs.induced[b2]) ==
                  cs.induced[h.quotient_table[b2][a]]))
                throw MalformedInput("induced action violates quotient relations");
    return cs;
}

IntVec CoinvariantSpace::project(const IntVec& v) const {
    IntVec out = projection.apply(v);
    for (auto& x : out) x = int_mod(x, p);
    return out;
}

LatticeModule dual_action(const LatticeModule& l) {
    const PointGroup& g = l.group;
    std::vector<IntMatrix> duals;
    for (int i = 0; i < g.order(); ++i)
        duals.push_back(unimodular_inverse(g.rep(i)).transposed());
    std::vector<std::vector<int>> table(g.order(), std::vector<int>(g.order()));
    for (int i = 0; i < g.order(); ++i)
        for (int j = 0; j < g.order(); ++j) table[i][j] = g.mul(i, j);
    LatticeModule out;
    out.name = l.name + "_dual";
    out.group = PointGroup::from_table(g.labels(), table, duals, g.generators());
    return out;
}

IntMatrix scale_automorphism(const LatticeModule& l, const std::vector<Int>& multiplier) {
    if (l.cyclotomic_n < 2) throw NotCyclic("scale automorphisms need a cyclotomic lattice");
    auto f = cyclotomic_polynomial(l.cyclotomic_n);
    int r = int(f.size()) - 1;
    std::vector<Int> basis(r, 0);
    IntMatrix m(r, r);
    for (int j = 0; j < r; ++j) {
        std::fill(basis.begin(), basis.end(), Int(0));
        basis[j] = 1;
        m.set_col(j, poly_mulmod(multiplier, basis, f));
    }
    Int d = m.det();
    if (d != 1 && d != -1) throw NotAUnit("multiplier determinant " + d.str());
    return m;
}

}  // namespace qcohom

#include <set>

#include "doctest.h"
#include "qcohom/descriptors.hpp"
#include "qcohom/phases.hpp"

using namespace qcohom;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVec> rv;
    for (auto& r : rows) {
        IntVec v;
        for (long x : r) v.push_back(x);
        rv.push_back(v);
    }
    return IntMatrix::from_rows(rv);
}

IntVec vec(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.push_back(x);
    return v;
}

LatticeModule module_of(PointGroup g, const std::string& name) {
    LatticeModule l;
    l.name = name;
    l.group = std::move(g);
    return l;
}

LatticeModule pg_module() {
    return module_of(cyclic_group(2, mat({{1, 0}, {0, -1}})), "pg");
}

Frac half() { return Frac(1, 2); }

}  // namespace

TEST_CASE("phase cocycle construction and arithmetic") {
    auto pg = pg_module();
    auto& g = pg.group;
    int m = g.generators()[0];

    std::vector<IntVec> vals(2, vec({0, 0}));
    vals[m] = vec({1, 0});
    auto phi = PhaseCocycle::create(g, 2, vals);
    CHECK(phi.eval(m, vec({1, 0})) == half());
    CHECK(phi.eval(m, vec({2, 0})).is_zero());
    CHECK(phi.eval(m, vec({0, 5})).is_zero());
    CHECK(phi.eval(g.identity(), vec({1, 0})).is_zero());

    // the same values fail the law at modulus 3
    CHECK_THROWS_AS(PhaseCocycle::create(g, 3, vals), NotACocycle);

    auto phi4 = phi.rescaled(4);
    CHECK(phi4.v[m] == vec({2, 0}));
    CHECK(phi4.eval(m, vec({1, 0})) == half());
    CHECK_THROWS_AS(phi.rescaled(3), MalformedInput);

    auto doubled = phi + phi;
    for (auto& w : doubled.v)
        for (auto& x : w) CHECK(x == 0);
    auto diff = phi - phi;
    for (auto& w : diff.v)
        for (auto& x : w) CHECK(x == 0);

    auto z = PhaseCocycle::zero(g, 2);
    CHECK((phi + z).eval(m, vec({1, 0})) == half());
}

TEST_CASE("coboundaries evaluate and pair to zero") {
    auto pg = pg_module();
    auto& g = pg.group;
    int m = g.generators()[0];

    GaugeFunction chi;
    chi.modulus = 4;
    chi.chi = vec({3, 5});
    auto d = coboundary(chi, g);
    CHECK(d.v[m] == vec({0, 2}));  // (rep(m) - 1) chi = (0, -10)

    // coboundaries pair to zero against every homology generator
    for (auto name : {"square_axis_mirror", "square_diagonal_mirror", "I212121", "I213"}) {
        auto l = preset_lattice(name);
        auto h = h1_bar(l);
        GaugeFunction c2;
        c2.modulus = 2 * l.group.order();
        c2.chi = IntVec(l.rank(), 0);
        for (int i = 0; i < l.rank(); ++i) c2.chi[i] = 3 * i + 1;
        auto dd = coboundary(c2, l.group);
        for (auto& gen : h.generators) CHECK(pair(dd, gen).is_zero());
    }

    // gauge invariance of the pairing
    auto hc = cohomology_classes(pg);
    auto hb = h1_bar(pg);
    auto phi = hc.generators[0];
    auto shifted = phi + d;
    for (auto& gen : hb.generators) CHECK(pair(phi, gen) == pair(shifted, gen));
}

TEST_CASE("cohomology structure is dual to homology with a perfect pairing") {
    std::vector<LatticeModule> cases;
    cases.push_back(pg_module());
    cases.push_back(module_of(cyclic_group(2, mat({{-1, 0}, {0, -1}})), "inv"));
    cases.push_back(cyclotomic_lattice(4, false));
    cases.push_back(cyclotomic_lattice(5, false));
    cases.push_back(cyclotomic_lattice(2, true));
    cases.push_back(cyclotomic_lattice(8, true));
    cases.push_back(cyclotomic_lattice(12, true));
    cases.push_back(cyclotomic_lattice(16, true));
    cases.push_back(preset_lattice("square_axis_mirror"));
    cases.push_back(preset_lattice("square_diagonal_mirror"));
    cases.push_back(preset_lattice("square4_axis_mirror"));
    cases.push_back(preset_lattice("square4_diagonal_mirror"));
    cases.push_back(preset_lattice("I212121"));
    cases.push_back(preset_lattice("I213"));

    for (auto& l : cases) {
        CAPTURE(l.name);
        auto hc = cohomology_classes(l);
        auto hb = h1_bar(l);
        CHECK(hc.factors() == dual_structure(hb.structure).factors);

        // pairing matrix over F_2 (all observed factors are 2) is invertible
        size_t k = hc.generators.size();
        REQUIRE(hb.generators.size() == k);
        if (k > 0) {
            F2Matrix p{int(k), int(k)};
            for (size_t i = 0; i < k; ++i)
                for (size_t j = 0; j < k; ++j) {
                    Frac f = pair(hc.generators[i], hb.generators[j]);
                    CHECK((f.is_zero() || f == half()));
                    p.set(int(i), int(j), f == half() ? 1 : 0);
                }
            CHECK(p.rank() == int(k));
        }

        // class coordinates recognize the generators, gauge shifts and all
        for (size_t i = 0; i < k; ++i) {
            IntVec cls = hc.class_of(hc.generators[i]);
            IntVec want(k, 0);
            want[i] = 1;
            CHECK(cls == want);
            GaugeFunction chi;
            chi.modulus = hc.modulus;
            chi.chi = IntVec(l.rank(), 0);
            chi.chi[0] = 1;
            CHECK(hc.class_of(hc.generators[i] + coboundary(chi, l.group)) == want);
            CHECK(hc.class_of(hc.combine(want)) == want);
        }
        CHECK(hc.class_of(PhaseCocycle::zero(l.group, l.rank())) == IntVec(k, 0));
    }
}

TEST_CASE("brute force enumeration over small modules") {
    // Independent oracle: list every function G -> (Z/M)^r satisfying the
    // cocycle law, list every coboundary of a gauge x/(M K), and compare
    // the quotient size with the computed structure.
    std::vector<LatticeModule> cases;
    cases.push_back(pg_module());
    cases.push_back(module_of(cyclic_group(2, mat({{-1, 0}, {0, -1}})), "inv"));
    cases.push_back(module_of(cyclic_group(2, mat({{0, 1}, {1, 0}})), "swap"));
    cases.push_back(module_of(cyclic_group(3, mat({{0, -1}, {1, -1}})), "c3"));
    cases.push_back(cyclotomic_lattice(4, false));
    cases.push_back(cyclotomic_lattice(2, true));
    cases.push_back(module_of(
        PointGroup::from_generators({"e", "a", "b"},
                                    {IntMatrix::identity(2), mat({{1, 0}, {0, -1}}),
                                     mat({{-1, 0}, {0, 1}})}),
        "klein"));

    for (auto& l : cases) {
        CAPTURE(l.name);
        auto& g = l.group;
        int n = g.order(), r = l.rank();
        Int m = n;
        long ml = long(n);

        int slots = (n - 1) * r;  // identity entries are forced to zero
        auto unpack = [&](long code) {
            std::vector<IntVec> v(n, IntVec(r, 0));
            for (int e = 0, t = 0; e < n; ++e) {
                if (e == g.identity()) continue;
                for (int i = 0; i < r; ++i, ++t) {
                    v[e][i] = code % ml;
                    code /= ml;
                }
            }
            return v;
        };
        long total = 1;
        for (int t = 0; t < slots; ++t) total *= ml;
        REQUIRE(total <= 100000);

        std::set<std::vector<IntVec>> cocycles;
        for (long code = 0; code < total; ++code) {
            auto v = unpack(code);
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b) {
                    IntVec w = g.rep(a).apply(v[b]);
                    for (int i = 0; i < r; ++i)
                        if (int_mod(v[a][i] + w[i] - v[g.mul(a, b)][i], m) != 0) ok = false;
                }
            if (ok) cocycles.insert(v);
        }

        std::set<std::vector<IntVec>> bounds;
        for (long kk = 1; kk <= 2 * ml; ++kk) {
            long span = ml * kk;
            long xs = 1;
            for (int i = 0; i < r; ++i) xs *= span;
            for (long code = 0; code < xs; ++code) {
                IntVec x(r, 0);
                long c = code;
                for (int i = 0; i < r; ++i) {
                    x[i] = c % span;
                    c /= span;
                }
                std::vector<IntVec> v(n, IntVec(r, 0));
                bool integral = true;
                for (int e = 0; e < n && integral; ++e) {
                    IntVec w = (g.rep(e) - IntMatrix::identity(r)).apply(x);
                    for (int i = 0; i < r; ++i) {
                        if (w[i] % kk != 0) integral = false;
                        else v[e][i] = int_mod(w[i] / kk, m);
                    }
                }
                if (integral) bounds.insert(v);
            }
        }

        for (auto& v : bounds) CHECK(cocycles.count(v) == 1);
        REQUIRE(cocycles.size() % bounds.size() == 0);
        Int order = Int(cocycles.size()) / Int(bounds.size());

        auto hc = cohomology_classes(l);
        CHECK(hc.order() == order);
        CHECK(dual_structure(h1_bar(l).structure).factors == hc.factors());

        // membership agrees: class zero exactly for the coboundaries
        for (auto& v : cocycles) {
            auto phi = PhaseCocycle::create(g, m, v);
            IntVec cls = hc.class_of(phi);
            bool zero = true;
            for (auto& x : cls) zero &= x == 0;
            CHECK(zero == (bounds.count(v) == 1));
        }
    }
}

TEST_CASE("reduction to the torsion modulus") {
    for (auto name : {"square_axis_mirror", "square4_axis_mirror", "I212121"}) {
        CAPTURE(name);
        auto l = preset_lattice(name);
        auto hc = cohomology_classes(l);
        auto hb = h1_bar(l);
        Int m = l.group.order();

        auto phi = hc.generators[0];
        GaugeFunction chi;
        chi.modulus = 4 * m;
        chi.chi = IntVec(l.rank(), 0);
        for (int i = 0; i < l.rank(); ++i) chi.chi[i] = 2 * i + 3;
        auto lifted = phi.rescaled(4 * m) + coboundary(chi, l.group);
        CHECK(lifted.modulus == 4 * m);

        auto red = reduce_to_torsion(lifted);
        CHECK(red.modulus == m);
        CHECK(hc.class_of(red) == hc.class_of(phi));
        for (auto& gen : hb.generators) CHECK(pair(red, gen) == pair(phi, gen));
    }

    // already reduced input keeps its class
    auto pg = pg_module();
    auto hc = cohomology_classes(pg);
    auto r = reduce_to_torsion(hc.generators[0]);
    CHECK(r.modulus == 2);
    CHECK(hc.class_of(r) == hc.class_of(hc.generators[0]));
}

TEST_CASE("gauge normalization at an element") {
    auto pg = pg_module();
    int m = pg.group.generators()[0];
    auto hc = cohomology_classes(pg);

    // the nontrivial class has phase 1/2 on the mirror axis, which is fixed
    CHECK_THROWS_AS(normalize_gauge_at(hc.generators[0], m), HypothesisFails);

    // a coboundary can always be gauged away
    GaugeFunction chi;
    chi.modulus = 8;
    chi.chi = vec({5, 3});
    auto d = coboundary(chi, pg.group);
    auto fixed = normalize_gauge_at(d, m);
    for (auto& x : fixed.v[m]) CHECK(x == 0);

    // rotations in the square lattice have no nonzero fixed vectors, so the
    // hypothesis is vacuous and the class survives
    auto l = preset_lattice("square_axis_mirror");
    auto hcd = cohomology_classes(l);
    auto hbd = h1_bar(l);
    int rot = l.group.generators()[0];
    auto norm = normalize_gauge_at(hcd.generators[0], rot);
    for (auto& x : norm.v[rot]) CHECK(x == 0);
    for (auto& gen : hbd.generators)
        CHECK(pair(norm, gen) == pair(hcd.generators[0], gen));
    CHECK(hcd.class_of(norm) == hcd.class_of(hcd.generators[0]));

    // normalizing at the identity is a no-op condition
    auto at_e = normalize_gauge_at(hcd.generators[0], l.group.identity());
    CHECK(hcd.class_of(at_e) == hcd.class_of(hcd.generators[0]));
}

TEST_CASE("translation cocycles") {
    auto pg = pg_module();
    auto& g = pg.group;
    int m = g.generators()[0];

    std::vector<Rat> q = {Rat(0), Rat(1, 2)};
    auto s = TranslationCocycle::create(g, q);
    CHECK(s.k(m) == vec({0, -1}));
    CHECK(s.k(g.identity()) == vec({0, 0}));
    CHECK(s.sigma(m) == s.k(m));  // the mirror is its own inverse
    CHECK_FALSE(s.integral());

    auto t = TranslationCocycle::create(g, {Rat(1), Rat(1)});
    CHECK(t.integral());
    CHECK(t.k(m) == vec({0, -2}));

    CHECK_THROWS_AS(TranslationCocycle::create(g, {Rat(0), Rat(1, 3)}),
                    NonIntegralCoefficients);
}

TEST_CASE("cup and cap products satisfy the pairing identity") {
    int checked = 0;
    bool found_half_i212121 = false;

    auto run_all = [&](const LatticeModule& l, const PhaseCocycle& phi,
                       const std::vector<Rat>& q, bool* found_half = nullptr) {
        auto& g = l.group;
        TranslationCocycle s;
        try {
            s = TranslationCocycle::create(g, q);
        } catch (const NonIntegralCoefficients&) {
            return;
        }
        for (int a = 0; a < g.order(); ++a)
            for (int b = a; b < g.order(); ++b) {
                if (g.mul(a, b) != g.mul(b, a)) continue;
                auto c = TwoCycle::commutator(g, a, b);
                auto km = km_identity_check(phi, s, c);
                CHECK(km.equal_up_to_sign);
                ++checked;
                if (found_half && km.lhs == half() && km.rhs == half())
                    *found_half = true;
            }
    };

    auto d4 = preset_lattice("square_axis_mirror");
    auto hcd4 = cohomology_classes(d4);
    run_all(d4, hcd4.generators[0], {Rat(1, 2), Rat(1, 2)});
    run_all(d4, hcd4.generators[0], {Rat(0), Rat(1, 2)});

    auto pg = pg_module();
    auto hcpg = cohomology_classes(pg);
    run_all(pg, hcpg.generators[0], {Rat(0), Rat(1, 2)});

    // quarters are needed in the last slot: the basis is body centered
    auto i2 = preset_lattice("I212121");
    auto hci2 = cohomology_classes(i2);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                run_all(i2, hci2.generators[0], {Rat(a, 4), Rat(b, 4), Rat(c, 4)},
                        &found_half_i212121);
    CHECK(found_half_i212121);

    // the order-12 group restricted to its normal 2-2-2 subgroup
    auto i3 = preset_lattice("I213");
    auto hci3 = cohomology_classes(i3);
    std::vector<int> invol;
    for (int e = 0; e < i3.group.order(); ++e)
        if (i3.group.element_order(e) <= 2) invol.push_back(e);
    REQUIRE(invol.size() == 4);
    std::vector<int> embed;
    auto sub = subgroup_point_group(i3.group, invol, &embed);
    auto phi3 = restrict_cocycle(hci3.generators[0], sub, embed);
    auto lsub = module_of(sub, "i213_222");
    bool found3 = false;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                run_all(lsub, phi3, {Rat(a, 4), Rat(b, 4), Rat(c, 4)}, &found3);
    CHECK(found3);
    CHECK(checked >= 10);

    // bad two-chains are refused
    auto c = TwoCycle::zero(d4.group);
    c.n[size_t(d4.group.generators()[0]) * d4.group.order() + d4.group.generators()[1]] = 1;
    TranslationCocycle sd = TranslationCocycle::create(d4.group, {Rat(1, 2), Rat(1, 2)});
    CHECK_THROWS_AS(cap_sigma(sd, c), NotA2Cycle);
    CHECK_THROWS_AS(
        TwoCycle::commutator(d4.group, d4.group.generators()[0], d4.group.generators()[1]),
        NotA2Cycle);
}

TEST_CASE("extinction reports") {
    auto pg = pg_module();
    auto hc = cohomology_classes(pg);
    int m = pg.group.generators()[0];

    std::vector<IntVec> ks = {vec({1, 0}),  vec({-1, 0}), vec({2, 0}),
                              vec({3, 0}),  vec({0, 1}),  vec({1, 1})};
    auto rep = extinction_set(hc.generators[0], ks);
    REQUIRE(rep.size() == ks.size());
    CHECK(rep[0].extinct);
    CHECK(rep[0].witness == m);
    CHECK(rep[0].phase == half());
    CHECK(rep[1].extinct);
    CHECK_FALSE(rep[2].extinct);
    CHECK(rep[3].extinct);
    CHECK_FALSE(rep[4].extinct);  // not fixed by the mirror
    CHECK_FALSE(rep[5].extinct);

    // the zero cocycle never extinguishes anything
    auto z = PhaseCocycle::zero(pg.group, 2);
    for (auto& r : extinction_set(z, ks)) CHECK_FALSE(r.extinct);

    // mirror-fixed axis of the square lattice class
    auto d4 = preset_lattice("square_axis_mirror");
    auto hcd = cohomology_classes(d4);
    auto rd = extinction_set(hcd.generators[0], {vec({1, 0}), vec({2, 0})});
    CHECK(rd[0].extinct);
    CHECK_FALSE(rd[1].extinct);
}

TEST_CASE("automorphism transport") {
    auto pg = pg_module();
    auto hc = cohomology_classes(pg);
    auto phi = hc.generators[0];
    int n = pg.group.order();

    std::vector<int> idperm(n);
    for (int i = 0; i < n; ++i) idperm[i] = i;
    auto same = apply_automorphism(phi, IntMatrix::identity(2), idperm);
    CHECK(hc.class_of(same) == hc.class_of(phi));

    // a diagonal module map commuting with the mirror
    auto moved = apply_automorphism(phi, mat({{-1, 0}, {0, 1}}), idperm);
    CHECK(hc.class_of(moved) == hc.class_of(phi));

    CHECK_THROWS_AS(apply_automorphism(phi, mat({{0, 1}, {1, 0}}), idperm), NotEquivariant);
    std::vector<int> bad = {0, 0};
    CHECK_THROWS_AS(apply_automorphism(phi, IntMatrix::identity(2), bad), MalformedInput);

    // conjugation of the dihedral group by the rotation, transported by the
    // rotation matrix itself
    auto d4 = preset_lattice("square_axis_mirror");
    auto& g = d4.group;
    auto hcd = cohomology_classes(d4);
    int r = g.generators()[0];
    std::vector<int> conj(g.order());
    for (int e = 0; e < g.order(); ++e) conj[e] = g.mul(r, g.mul(e, g.inv(r)));
    auto phid = hcd.generators[0];
    auto out = apply_automorphism(phid, g.act(g.inv(r)), conj);
    CHECK(hcd.class_of(out) == hcd.class_of(phid));
}

TEST_CASE("subgroups and restriction") {
    auto d4 = preset_lattice("square_axis_mirror");
    auto& g = d4.group;
    int r = g.generators()[0];

    std::vector<int> rot = {g.identity()};
    for (int cur = r; cur != g.identity(); cur = g.mul(cur, r)) rot.push_back(cur);
    std::vector<int> embed;
    auto sub = subgroup_point_group(g, rot, &embed);
    CHECK(sub.order() == 4);
    for (int i = 0; i < sub.order(); ++i) CHECK(sub.rep(i) == g.rep(embed[i]));

    // rotations alone carry no classes, so the restriction must die
    auto hcd = cohomology_classes(d4);
    auto res = restrict_cocycle(hcd.generators[0], sub, embed);
    auto hsub = cohomology_classes(module_of(sub, "c4"));
    CHECK(hsub.trivial());
    CHECK(hsub.class_of(res).empty());

    CHECK_THROWS_AS(subgroup_point_group(g, {g.identity(), r}), NotSubgroup);
}

TEST_CASE("dihedral shortcut agrees with the resolution") {
    for (int nn : {2, 3, 4, 5, 6, 8, 12, 16}) {
        CAPTURE(nn);
        auto l = cyclotomic_lattice(nn, true);
        CHECK(dihedral_2d_factors(l) == h1_bar(l).factors());
    }
    for (auto name : {"square_axis_mirror", "square_diagonal_mirror",
                      "square4_axis_mirror", "square4_diagonal_mirror"}) {
        CAPTURE(name);
        auto l = preset_lattice(name);
        CHECK(dihedral_2d_factors(l) == h1_bar(l).factors());
    }

    CHECK_THROWS_AS(dihedral_2d_factors(cyclotomic_lattice(4, false)), MalformedInput);
    CHECK_THROWS_AS(dihedral_2d_factors(preset_lattice("I213")), RelationViolation);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <latticelab/generators.hpp>
#include <latticelab/isomorphism.hpp>

using namespace latticelab;

namespace {

Lattice fig2() { return figure_lattice("fig2").lattice; }

// brute-force reduction oracle: covers = pairs with empty open interval
std::vector<std::pair<int, int>> reduction_oracle(const Poset& p) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < p.n; ++a)
        for (int b = 0; b < p.n; ++b) {
            if (a == b || !p.leq(a, b)) continue;
            bool strict_between = false;
            for (int z = 0; z < p.n && !strict_between; ++z)
                if (z != a && z != b && p.leq(a, z) && p.leq(z, b)) strict_between = true;
            if (!strict_between) out.emplace_back(a, b);
        }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("bitset basics") {
    Bitset b(130);
    b.set(0);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.first() == 0);
    CHECK(b.last() == 129);
    CHECK(b.next(0) == 64);
    CHECK(b.next(64) == 129);
    CHECK(b.next(129) == -1);
    Bitset c(130);
    c.set(64);
    CHECK(c.subset_of(b));
    CHECK(!b.subset_of(c));
    b.and_not(c);
    CHECK(!b.test(64));
    CHECK(b.count() == 2);
}

TEST_CASE("poset_from_covers on a singleton") {
    Poset p = poset_from_covers(1, {});
    CHECK(p.n == 1);
    CHECK(p.covers.empty());
    CHECK(p.leq(0, 0));
}

TEST_CASE("poset_from_covers builds the fig2 lattice") {
    Lattice L = fig2();
    CHECK(L.n() == 5);
    CHECK(L.bottom == 0);
    CHECK(L.top == 4);
    // meet of any two middle elements is bottom
    CHECK(L.meet(1, 2) == 0);
    CHECK(L.meet(2, 3) == 0);
    CHECK(L.join(1, 3) == 4);
}

TEST_CASE("cycle detection") {
    CHECK_THROWS_AS(poset_from_covers(2, {{0, 1}, {1, 0}}), CycleDetected);
    CHECK_THROWS_AS(poset_from_covers(2, {{0, 2}}), IndexOutOfRange);
}

TEST_CASE("redundant cover pairs are dropped") {
    // chain 0<1<2 declared with the redundant pair (0,2)
    Poset p = poset_from_covers(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(p.covers == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("as_lattice accepts chains and rejects bowties") {
    Lattice c3 = chain(3);
    CHECK(c3.meet(0, 2) == 0);
    CHECK(c3.join(1, 2) == 2);

    // two atoms below two coatoms: the atoms have no join
    std::vector<std::pair<int, int>> cov = {{0, 1}, {0, 2}, {1, 3}, {1, 4},
                                            {2, 3}, {2, 4}, {3, 5}, {4, 5}};
    Poset p = poset_from_covers(6, cov);
    CHECK_THROWS_AS(as_lattice(p), NotALattice);
    try {
        as_lattice(p);
    } catch (const NotALattice& e) {
        CHECK(e.x == 1);
        CHECK(e.y == 2);
    }
}

TEST_CASE("irreducibles on small lattices") {
    Lattice c3 = chain(3);
    Irreducibles ir = irreducibles(c3);
    CHECK(ir.joins == std::vector<int>{1, 2});
    CHECK(ir.meets == std::vector<int>{0, 1});
    CHECK(ir.j_star[2] == 1);
    CHECK(ir.m_star[0] == 1);

    Lattice b2 = boolean_lattice(2);
    Irreducibles ib = irreducibles(b2);
    CHECK(ib.joins == std::vector<int>{1, 2});
    CHECK(ib.meets == std::vector<int>{1, 2});

    Lattice hex = figure_lattice("fig1_left").lattice;
    Irreducibles ih = irreducibles(hex);
    CHECK(ih.joins.size() == 4);
    CHECK(ih.meets.size() == 4);
}

TEST_CASE("intervals") {
    Lattice hex = figure_lattice("fig1_left").lattice;
    auto [full, emb] = interval(hex, hex.bottom, hex.top);
    CHECK(full.n() == 6);
    for (int i = 0; i < 6; ++i) CHECK(emb.element_map[i] == i);
    CHECK(full.p.covers == hex.p.covers);

    Lattice b2 = boolean_lattice(2);
    auto [two, e2] = interval(b2, 0, 1);
    CHECK(two.n() == 2);
    CHECK(is_isomorphic(two, chain(2)));

    CHECK_THROWS_AS(interval(b2, 1, 2), NotComparable);

    // [bot, m0] of the fig4 lattice is the 4-element L_0
    GenResult f4 = figure_lattice("fig4");
    int m0 = -1;
    for (int i = 0; i < f4.lattice.n(); ++i)
        if (f4.element_names[i] == "m0") m0 = i;
    auto [l0, e0] = interval(f4.lattice, f4.lattice.bottom, m0);
    CHECK(l0.n() == 4);
}

TEST_CASE("dual is an involution and swaps the constants") {
    for (const char* id : {"fig1_left", "fig2", "fig4", "fig7"}) {
        Lattice L = figure_lattice(id).lattice;
        Lattice d = dual(L);
        CHECK(d.bottom == L.top);
        CHECK(d.top == L.bottom);
        Lattice dd = dual(d);
        CHECK(dd.p.covers == L.p.covers);
        for (int x = 0; x < L.n(); ++x)
            for (int y = 0; y < L.n(); ++y) {
                CHECK(d.leq(x, y) == L.leq(y, x));
                CHECK(dd.leq(x, y) == L.leq(x, y));
            }
    }
    CHECK(is_isomorphic(dual(chain(3)), chain(3)));
}

TEST_CASE("interval commutes with dual") {
    Lattice L = figure_lattice("fig4").lattice;
    for (int u = 0; u < L.n(); ++u)
        for (int v = 0; v < L.n(); ++v) {
            if (!L.leq(u, v)) continue;
            auto [i1, e1] = interval(L, u, v);
            auto [i2, e2] = interval(dual(L), v, u);
            CHECK(e1.element_map == e2.element_map);
            CHECK(dual(i1).p.covers == i2.p.covers);
        }
}

TEST_CASE("products") {
    Lattice sq = product(chain(2), chain(2));
    CHECK(sq.p.covers == boolean_lattice(2).p.covers);

    Lattice hex = figure_lattice("fig1_left").lattice;
    Lattice pr = product(hex, chain(2));
    CHECK(pr.n() == 12);
    // Eq (1): joins of the product = (J x {0'}) u ({0} x J');
    Irreducibles ih = irreducibles(hex), ic = irreducibles(chain(2)), ip = irreducibles(pr);
    CHECK(ip.joins.size() == ih.joins.size() + ic.joins.size());
    std::vector<int> expect;
    for (int j : ih.joins) expect.push_back(j * 2 + 0);
    for (int j : ic.joins) expect.push_back(hex.bottom * 2 + j);
    std::sort(expect.begin(), expect.end());
    CHECK(ip.joins == expect);

    Lattice unit = product(hex, chain(1));
    CHECK(unit.p.covers == hex.p.covers);
}

TEST_CASE("order ideal lattices") {
    Poset anti = poset_from_covers(2, {});
    IdealLattice j = order_ideal_lattice(anti);
    CHECK(j.lattice.n() == 4);
    CHECK(is_isomorphic(j.lattice, boolean_lattice(2)));

    Poset two_chain = poset_from_covers(2, {{0, 1}});
    CHECK(order_ideal_lattice(two_chain).lattice.n() == 3);

    IdealLattice r = order_ideal_lattice(root_poset(CoxType::A, 3));
    CHECK(r.lattice.n() == 14);

    // meet = intersection, join = union
    for (int x = 0; x < j.lattice.n(); ++x)
        for (int y = 0; y < j.lattice.n(); ++y) {
            Bitset mi = j.ideals[x];
            mi &= j.ideals[y];
            CHECK(j.ideals[j.lattice.meet(x, y)] == mi);
            Bitset un = j.ideals[x];
            un |= j.ideals[y];
            CHECK(j.ideals[j.lattice.join(x, y)] == un);
        }
}

TEST_CASE("longest chains") {
    CHECK(longest_chain_length(chain(5)) == 4);
    CHECK(longest_chain_length(boolean_lattice(2)) == 2);
    CHECK(longest_chain_length(figure_lattice("fig1_left").lattice) == 3);
}

TEST_CASE("covers equal the recomputed transitive reduction") {
    SplitMix64 rng(12345);
    int tried = 0;
    while (tried < 40) {
        auto L = random_lattice(rng);
        if (!L) continue;
        ++tried;
        CHECK(L->p.covers == reduction_oracle(L->p));
    }
}

TEST_CASE("absorption laws hold on sampled lattices") {
    SplitMix64 rng(777);
    std::vector<Lattice> pool = {chain(4), boolean_lattice(3), figure_lattice("fig4").lattice};
    for (int i = 0; i < 10;) {
        auto L = random_lattice(rng);
        if (!L) continue;
        pool.push_back(*L);
        ++i;
    }
    for (const Lattice& L : pool)
        for (int x = 0; x < L.n(); ++x)
            for (int y = 0; y < L.n(); ++y) {
                CHECK(L.meet(x, L.join(x, y)) == x);
                CHECK(L.join(x, L.meet(x, y)) == x);
            }
}

TEST_CASE("tables agree with on-demand meets") {
    Lattice hex = figure_lattice("fig1_left").lattice;
    Lattice no_tab = as_lattice(hex.p, /*table_cap=*/0);
    CHECK(!no_tab.has_tables());
    for (int x = 0; x < hex.n(); ++x)
        for (int y = 0; y < hex.n(); ++y) {
            CHECK(hex.meet(x, y) == no_tab.meet(x, y));
            CHECK(hex.join(x, y) == no_tab.join(x, y));
        }
}

TEST_CASE("order ideal lattice size cap") {
    Poset big_antichain = poset_from_covers(24, {});
    CHECK_THROWS_AS(order_ideal_lattice(big_antichain, 1000), SizeLimitExceeded);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "nckernel/lattice.hpp"

using namespace nck;

namespace {

Partition P(const char* text) { return Partition::parse(text); }

// meet candidate: common refinement (blockwise intersections)
Partition common_refinement(const Partition& a, const Partition& b) {
    std::map<std::pair<int, int>, std::vector<int>> cells;
    for (int e = 1; e <= a.n(); ++e) cells[{a.block_of(e), b.block_of(e)}].push_back(e);
    std::vector<std::vector<int>> blocks;
    for (auto& [k, v] : cells) blocks.push_back(v);
    return Partition(a.n(), blocks);
}

// join candidate: transitive closure of the two block structures, then merge
// crossing blocks until non-crossing
Partition nc_join_closure(const Partition& a, const Partition& b) {
    const int n = a.n();
    std::vector<int> cls(n + 1);
    for (int i = 0; i <= n; ++i) cls[i] = i;
    std::function<int(int)> find = [&](int x) { return cls[x] == x ? x : cls[x] = find(cls[x]); };
    auto unite = [&](int x, int y) { cls[find(x)] = find(y); };
    for (const auto& blk : a.blocks())
        for (size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
    for (const auto& blk : b.blocks())
        for (size_t i = 1; i < blk.size(); ++i) unite(blk[0], blk[i]);
    // crossing closure
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 1; x <= n && !changed; ++x)
            for (int y = x + 1; y <= n && !changed; ++y)
                for (int z = y + 1; z <= n && !changed; ++z)
                    for (int w = z + 1; w <= n && !changed; ++w)
                        if (find(x) == find(z) && find(y) == find(w) && find(x) != find(y)) {
                            unite(x, y);
                            changed = true;
                        }
    }
    std::map<int, std::vector<int>> groups;
    for (int e = 1; e <= n; ++e) groups[find(e)].push_back(e);
    std::vector<std::vector<int>> blocks;
    for (auto& [k, v] : groups) blocks.push_back(v);
    return Partition(n, blocks);
}

}  // namespace

TEST_CASE("lattice caches are memoized") {
    const NcLattice& a = NcLattice::of(5);
    const NcLattice& b = NcLattice::of(5);
    CHECK(&a == &b);
    CHECK(a.size() == 42);
    CHECK(&enumerate_nc(4) == &NcLattice::of(4).partitions());
}

TEST_CASE("per-partition lattice data") {
    const NcLattice& lat = NcLattice::of(4);
    CHECK(lat.nblocks(lat.zero_index()) == 4);
    CHECK(lat.nblocks(lat.one_index()) == 1);
    int idx = lat.index_of(P("{1,4}{2,3}"));
    CHECK(lat.irreducible(idx));
    CHECK(lat.inner(idx) == 1);
    CHECK(lat.part(lat.kreweras_of(idx)) == kreweras(P("{1,4}{2,3}")));
    CHECK_THROWS_AS(lat.index_of(Partition::one(3)), std::domain_error);
}

TEST_CASE("(NC(n), leq) is a lattice: meets and joins exist (closure route)") {
    for (int n = 2; n <= 6; ++n) {
        const auto& parts = enumerate_nc(n);
        const NcLattice& lat = NcLattice::of(n);
        for (size_t i = 0; i < parts.size(); i += (n >= 6 ? 7 : 1)) {
            for (size_t j = i; j < parts.size(); j += (n >= 6 ? 5 : 1)) {
                const Partition& p = parts[i];
                const Partition& q = parts[j];
                Partition meet = common_refinement(p, q);
                CHECK(leq(meet, p));
                CHECK(leq(meet, q));
                Partition join = nc_join_closure(p, q);
                CHECK(leq(p, join));
                CHECK(leq(q, join));
                // extremality against every lattice element
                for (int r = 0; r < lat.size(); ++r) {
                    const Partition& rho = lat.part(r);
                    if (leq(rho, p) && leq(rho, q)) CHECK(leq(rho, meet));
                    if (leq(p, rho) && leq(q, rho)) CHECK(leq(join, rho));
                }
            }
        }
    }
}

TEST_CASE("Kreweras is an anti-isomorphism (<< vs interval order) on irreducibles") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<Partition> irred;
        for (const Partition& p : enumerate_nc(n))
            if (p.is_irreducible()) irred.push_back(p);
        std::set<Partition> image;
        for (const Partition& t1 : irred) {
            Partition k1 = kreweras(t1);
            // image partitions have {n} as a singleton block
            CHECK(k1.blocks()[k1.block_of(n)] == std::vector<int>{n});
            image.insert(k1);
            for (const Partition& t2 : irred)
                CHECK(ll(t1, t2) == sqsubseteq(kreweras(t2), kreweras(t1)));
        }
        // bijectivity onto that set
        size_t with_singleton_n = 0;
        for (const Partition& s : enumerate_nc(n))
            if (s.blocks()[s.block_of(n)] == std::vector<int>{n}) ++with_singleton_n;
        CHECK(image.size() == irred.size());
        CHECK(image.size() == with_singleton_n);
    }
}

TEST_CASE("upper ideals of << over irreducible partitions") {
    for (int n = 2; n <= 6; ++n) {
        const auto& parts = enumerate_nc(n);
        for (const Partition& pi : parts) {
            if (!pi.is_irreducible()) continue;
            long long total = 0;
            std::map<int, long long> by_blocks;
            for (const Partition& s : parts)
                if (ll(pi, s)) {
                    ++total;
                    ++by_blocks[s.num_blocks()];
                }
            CHECK(total == (1LL << (pi.num_blocks() - 1)));
            for (int k = 1; k <= pi.num_blocks(); ++k) {
                long long binom = 1;
                for (int i = 0; i < k - 1; ++i)
                    binom = binom * (pi.num_blocks() - 1 - i) / (i + 1);
                CHECK(by_blocks[k] == binom);
            }
        }
    }
}

TEST_CASE("chains between 0_4 and 1_4") {
    auto all = chains_between(Partition::zero(4), Partition::one(4), false);
    CHECK(all.size() == 29);
    auto eff = chains_between(Partition::zero(4), Partition::one(4), true);
    CHECK(eff.size() == 25);

    Chain bad({Partition::zero(4), P("{1,2}{3}{4}"), P("{1,2}{3,4}"), Partition::one(4)});
    CHECK_FALSE(bad.is_efficient());
    Chain good({Partition::zero(4), P("{1,2}{3,4}"), Partition::one(4)});
    CHECK(good.is_efficient());
    CHECK(good.blocks_plus().size() == 3);

    CHECK_THROWS_AS(chains_between(Partition::one(4), Partition::zero(4), false),
                    std::domain_error);
    CHECK_THROWS_AS(Chain({Partition::zero(4)}), std::domain_error);
    CHECK_THROWS_AS(Chain({Partition::one(4), Partition::one(4)}), std::domain_error);
}

TEST_CASE("recursive efficient-chain enumeration agrees with the filter oracle") {
    for (int n = 2; n <= 5; ++n) {
        for (const Partition& pi : enumerate_nc(n)) {
            if (pi == Partition::one(n)) continue;
            // oracle: filter all chains
            auto all = chains_between(pi, Partition::one(n), false);
            std::set<std::vector<Partition>> expected;
            for (const Chain& c : all)
                if (c.is_efficient()) expected.insert(c.steps);
            std::set<std::vector<Partition>> got;
            for (const Chain& c : efficient_chains_to_top(pi)) {
                CHECK(c.is_efficient());
                got.insert(c.steps);
            }
            CHECK(got.size() == efficient_chains_to_top(pi).size());  // no duplicates
            CHECK(got == expected);
        }
    }
}

TEST_CASE("chains in intervals other than the full one") {
    auto chains = chains_between(Partition::zero(3), P("{1,2}{3}"), false);
    CHECK(chains.size() == 1);  // only (0_3, {1,2}{3}) since the interval is a 2-chain
    auto sub = chains_between(Partition::zero(4), P("{1,2}{3,4}"), true);
    for (const Chain& c : sub) CHECK(c.is_efficient());
}

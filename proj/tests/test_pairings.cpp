#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wg/pairings.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace wg;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

std::vector<Perm> symmetric_group(int m) {
    std::vector<int> img(static_cast<size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    std::vector<Perm> out;
    do {
        out.push_back(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace

TEST_CASE("permutations") {
    CHECK_THROWS(Perm({0, 0}));
    CHECK_THROWS(Perm({0, 2}));
    Perm c({1, 2, 0});
    CHECK(c.compose(c.inverse()) == Perm::identity(3));
    CHECK(c.inverse().compose(c) == Perm::identity(3));
    CHECK(c.cycle_type() == P({3}));
    Perm t({1, 0, 2, 3});
    CHECK(t.cycle_type() == P({2, 1, 1}));
    // composition applies the right factor first
    Perm swap3({1, 0, 2});
    CHECK(c.compose(swap3)(0) == c(swap3(0)));
    CHECK(c.compose(swap3) == Perm({2, 1, 0}));
}

TEST_CASE("pairing canonical form") {
    PairPartition m({{2, 0}, {3, 1}});
    CHECK(m.flat() == std::vector<int>{0, 2, 1, 3});
    CHECK(m.str() == "{1,3}{2,4}");
    CHECK(PairPartition::parse("{3,4}{1,2}") == PairPartition::identity(2));
    CHECK(PairPartition::parse("{2,1}{4,3}") == PairPartition::identity(2));
    CHECK(PairPartition::parse("{1,4}{2,3}").flat() == std::vector<int>{0, 3, 1, 2});
    CHECK(PairPartition::parse(PairPartition::identity(3).str()) == PairPartition::identity(3));
    CHECK_THROWS(PairPartition::parse("{1,2}{2,3}"));
    CHECK_THROWS(PairPartition::parse("{0,1}"));
    CHECK_THROWS(PairPartition({{0, 0}}));

    for (int n = 1; n <= 4; ++n) {
        for (const auto& p : enumerate_pairings(n)) {
            const auto& s = p.flat();
            for (int i = 0; i < n; ++i) CHECK(s[static_cast<size_t>(2 * i)] < s[static_cast<size_t>(2 * i + 1)]);
            for (int i = 0; i + 1 < n; ++i) CHECK(s[static_cast<size_t>(2 * i)] < s[static_cast<size_t>(2 * i + 2)]);
            CHECK(s[0] == 0);
        }
    }
}

TEST_CASE("pairing enumeration counts and order") {
    CHECK(enumerate_pairings(1).size() == 1);
    CHECK(enumerate_pairings(2).size() == 3);
    // (2n-1)!! by its recurrence
    long expect = 1;
    for (int n = 1; n <= 6; ++n) {
        expect *= 2 * n - 1;
        CHECK(static_cast<long>(enumerate_pairings(n).size()) == expect);
    }
    auto all = enumerate_pairings(3);
    CHECK(all.front() == PairPartition::identity(3));
    CHECK(std::is_sorted(all.begin(), all.end()));
    std::set<PairPartition> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
}

TEST_CASE("embedding into the symmetric group") {
    CHECK(PairPartition::identity(2).to_perm() == Perm::identity(4));
    CHECK(PairPartition::parse("{1,3}{2,4}").to_perm() == Perm({0, 2, 1, 3}));
    CHECK(PairPartition::parse("{1,4}{2,3}").to_perm() == Perm({0, 3, 1, 2}));
}

TEST_CASE("coset types") {
    CHECK_THROWS(coset_type(Perm::identity(3)));
    for (int n = 1; n <= 4; ++n) {
        CHECK(coset_type(Perm::identity(2 * n)) == P(std::vector<int>(static_cast<size_t>(n), 1)));
    }
    CHECK(coset_type(PairPartition::parse("{1,3}{2,4}").to_perm()) == P({2}));
    for (const Perm& zeta : enumerate_hyperoctahedral(3)) {
        CHECK(coset_type(zeta) == P({1, 1, 1}));
    }
}

TEST_CASE("loop counts") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& m : enumerate_pairings(n)) {
            CHECK(loops(m, m) == n);
        }
    }
    auto two = enumerate_pairings(2);
    for (const auto& a : two) {
        for (const auto& b : two) {
            if (!(a == b)) CHECK(loops(a, b) == 1);
        }
    }
    CHECK(loops(PairPartition::parse("{1,2}{3,4}{5,6}"), PairPartition::parse("{1,2}{3,5}{4,6}")) == 2);
    CHECK_THROWS(loops(PairPartition::identity(2), PairPartition::identity(3)));

    // loop count equals the length of the relative coset type
    for (int n = 1; n <= 4; ++n) {
        auto all = enumerate_pairings(n);
        for (const auto& a : all) {
            for (const auto& b : all) {
                CHECK(loops(a, b) ==
                      coset_type(a.to_perm().inverse().compose(b.to_perm())).length());
            }
        }
    }
}

TEST_CASE("blockwise action") {
    PairPartition m = PairPartition::parse("{1,3}{2,4}");
    CHECK(act(Perm::identity(4), m) == m);
    // 3-cycle sending 1->3, 3->2, 2->1 (1-based)
    Perm sigma({2, 0, 1, 3});
    PairPartition image = act(sigma, m);
    CHECK(image == PairPartition::parse("{1,4}{2,3}"));
    CHECK(image.to_perm() == Perm({0, 3, 1, 2}));
    // a transposition applied twice gives the original back
    Perm tr({1, 0, 2, 3});
    CHECK(act(tr, act(tr, m)) == m);

    // the action permutes pairings and preserves relative loop counts
    for (int n = 1; n <= 3; ++n) {
        auto all = enumerate_pairings(n);
        for (const Perm& sigma2 : symmetric_group(2 * n)) {
            for (const auto& a : all) {
                for (const auto& b : all) {
                    CHECK(loops(act(sigma2, a), act(sigma2, b)) == loops(a, b));
                }
            }
        }
    }
}

TEST_CASE("hyperoctahedral enumeration") {
    CHECK(enumerate_hyperoctahedral(1).size() == 2);
    CHECK(enumerate_hyperoctahedral(2).size() == 8);
    CHECK(enumerate_hyperoctahedral(3).size() == 48);
    CHECK_THROWS(enumerate_hyperoctahedral(8));

    // oracle: the centralizer of (1,2)(3,4)(5,6) filtered from all of S_6
    Perm base({1, 0, 3, 2, 5, 4});
    std::set<Perm> expected;
    for (const Perm& sigma : symmetric_group(6)) {
        if (sigma.compose(base) == base.compose(sigma)) expected.insert(sigma);
    }
    auto got = enumerate_hyperoctahedral(3);
    std::set<Perm> got_set(got.begin(), got.end());
    CHECK(got_set == expected);

    // pairings times the stabilizer tile the whole group exactly once
    for (int n = 1; n <= 3; ++n) {
        std::set<Perm> seen;
        for (const auto& m : enumerate_pairings(n)) {
            for (const Perm& zeta : enumerate_hyperoctahedral(n)) {
                CHECK(seen.insert(m.to_perm().compose(zeta)).second);
            }
        }
        CHECK(BigInt(static_cast<long>(seen.size())) == factorial(2 * n));
    }
}

TEST_CASE("coset representatives by type") {
    auto [a, b] = coset_rep_pair(P({1, 1}));
    CHECK(a == PairPartition::identity(2));
    CHECK(b == PairPartition::identity(2));
    auto [c, e] = coset_rep_pair(P({2}));
    CHECK(coset_type(c.to_perm().inverse().compose(e.to_perm())) == P({2}));
    for (int n = 1; n <= 6; ++n) {
        for (const auto& rho : partitions_of(n)) {
            auto [m, nn] = coset_rep_pair(rho);
            CHECK(coset_type(m.to_perm().inverse().compose(nn.to_perm())) == rho);
        }
    }
}

TEST_CASE("unitary pairing subset") {
    auto one = unitary_pairings(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == PairPartition::identity(1));

    auto two = unitary_pairings(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == PairPartition::parse("{1,3}{2,4}"));
    CHECK(two[1] == PairPartition::parse("{1,4}{2,3}"));
    CHECK(unitary_pairings(4).size() == 24);

    CHECK(unitary_to_sn(two[0]) == Perm::identity(2));
    CHECK(unitary_to_sn(two[1]) == Perm({1, 0}));
    CHECK(unitary_to_sn(PairPartition::parse("{1,5}{2,6}{3,4}")) == Perm({1, 2, 0}));
    CHECK_THROWS(unitary_to_sn(PairPartition::identity(2)));

    // the subset is exactly the pairings crossing the midpoint
    for (int n = 1; n <= 4; ++n) {
        std::set<PairPartition> expect;
        for (const auto& m : enumerate_pairings(n)) {
            bool crossing = true;
            for (int i = 0; i < n && crossing; ++i) {
                crossing = m.flat()[static_cast<size_t>(2 * i)] < n &&
                           m.flat()[static_cast<size_t>(2 * i + 1)] >= n;
            }
            if (crossing) expect.insert(m);
        }
        auto got = unitary_pairings(n);
        CHECK(std::set<PairPartition>(got.begin(), got.end()) == expect);
    }
}

#include <doctest.h>

#include <map>

#include "planar/binomial.hpp"
#include "planar/errors.hpp"

using namespace planar;

namespace {

PlanarTree T(const char* text) { return parse_tree(text); }

Count choose(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Count out = 1;
    for (std::size_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

} // namespace

TEST_CASE("first kind, small values") {
    CHECK(binom1(PlanarTree::corona(4), T("(x x)")) == 6);
    CHECK(binom1(PlanarTree::corona(5), PlanarTree::corona(3)) == 10);
    CHECK(binom1(T("((x x) x)"), T("(x x)")) == 3);
    CHECK(binom1(T("x"), T("1")) == 1);
    CHECK(binom1(T("x"), T("x")) == 1);
    CHECK(binom1(T("1"), T("x")) == 0);
    CHECK(binom1(T("((x x) x)"), T("(x (x x))")) == 0);
    CHECK(binom1(T("((x x) (x x))"), T("((x x) x)")) == 2);
    CHECK(binom1(T("((x x) (x x))"), T("(x (x x))")) == 2);
    CHECK(binom1(T("((x x) (x x))"), T("(x x x)")) == 0);
}

TEST_CASE("coronas reduce to classical binomials") {
    for (std::size_t n = 2; n <= 9; ++n)
        for (std::size_t m = 2; m <= 10; ++m)
            CHECK(binom1(PlanarTree::corona(n), PlanarTree::corona(m)) == choose(n, m));
}

TEST_CASE("first kind oracle agrees with recursion, degree <= 6") {
    BinomialTable table;
    for (std::size_t d = 0; d <= 6; ++d)
        for (const auto& t : enumerate_trees(d))
            for (std::size_t e = 0; e <= 7; ++e)
                for (const auto& s : enumerate_trees(e)) REQUIRE(table.first(t, s) == binom1_oracle(t, s));
}

TEST_CASE("oracle caps") {
    const auto big = PlanarTree::corona(21);
    CHECK_THROWS_AS(binom1_oracle(big, PlanarTree::leaf()), ResourceError);
    CHECK_THROWS_AS(binom2_oracle(big, PlanarTree::leaf(), PlanarTree::leaf()), ResourceError);
    CHECK(binom1_oracle(big, PlanarTree::leaf(), 21) == 21);
    // The recursion has no cap.
    CHECK(binom1(PlanarTree::corona(40), PlanarTree::corona(20)) == 137846528820ULL);
}

TEST_CASE("second kind, small values") {
    CHECK(binom2(T("((x x) x)"), T("x"), T("(x x)")) == 3);
    CHECK(binom2(T("((x x) x)"), T("(x x)"), T("x")) == 3);
    CHECK(binom2(T("(x x)"), T("x"), T("x")) == 2);
    CHECK(binom2(T("(x x)"), T("1"), T("(x x)")) == 1);
    CHECK(binom2(T("(x x)"), T("(x x)"), T("1")) == 1);
    CHECK(binom2(T("(x x)"), T("x"), T("(x x)")) == 0);
    CHECK(binom2(T("1"), T("1"), T("1")) == 1);
    CHECK(binom2(PlanarTree::corona(4), T("(x x)"), T("(x x)")) == 6);
    CHECK(binom2(T("((x x) (x x))"), T("(x x)"), T("(x x)")) == 6);
    CHECK(binom2(T("((x x) (x x))"), T("((x x) x)"), T("x")) == 2);
}

TEST_CASE("second kind properties, degree <= 5") {
    BinomialTable table;
    for (std::size_t d = 0; d <= 5; ++d)
        for (const auto& t : enumerate_trees(d)) {
            const auto pairs = contraction_pair_histogram(t);
            Count total = 0;
            for (const auto& [sv, n] : pairs) {
                REQUIRE(table.second(t, sv.first, sv.second) == n);
                REQUIRE(table.second(t, sv.second, sv.first) == n);
                total += n;
            }
            CHECK(total == (Count{1} << d));
            for (std::size_t e = 0; e <= d; ++e)
                for (const auto& s : enumerate_trees(e)) {
                    Count marginal = 0;
                    for (const auto& v : enumerate_trees(d - e)) marginal += table.second(t, s, v);
                    REQUIRE(marginal == table.first(t, s));
                }
        }
}

TEST_CASE("histograms") {
    const auto hist = contraction_histogram(T("((x x) x)"));
    CHECK(hist.size() == 4);
    CHECK(hist.at(T("1")) == 1);
    CHECK(hist.at(T("x")) == 3);
    CHECK(hist.at(T("(x x)")) == 3);
    CHECK(hist.at(T("((x x) x)")) == 1);
}

TEST_CASE("gamma sets") {
    SUBCASE("cardinality of the star class") {
        for (std::size_t m = 2; m <= 6; ++m)
            for (std::size_t r = 2; r <= 6; ++r)
                for (std::size_t s = 2; s <= 6; ++s) {
                    Count expected = 0;
                    if (r <= m && s <= m && r + s >= m) expected = choose(m, r) * choose(r, r + s - m);
                    CHECK(gamma_sets(m, r, s).star.size() == expected);
                }
    }
    SUBCASE("partition and covering") {
        for (std::size_t m = 2; m <= 5; ++m)
            for (std::size_t r = 2; r <= 5; ++r)
                for (std::size_t s = 2; s <= 5; ++s) {
                    const auto g = gamma_sets(m, r, s);
                    CHECK(g.prime.size() + g.double_prime.size() + g.star.size() == g.all.size());
                    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
                    for (const auto& p : g.all) {
                        CHECK((p.alpha | p.beta) == full);
                        const auto a = static_cast<std::size_t>(__builtin_popcountll(p.alpha));
                        const auto b = static_cast<std::size_t>(__builtin_popcountll(p.beta));
                        CHECK((a == 1 || a == r));
                        CHECK((b == 1 || b == s));
                        if (a == 1) CHECK(p.cls == GammaClass::prime);
                        else if (b == 1) CHECK(p.cls == GammaClass::double_prime);
                        else CHECK(p.cls == GammaClass::star);
                    }
                }
    }
    CHECK_THROWS_AS(gamma_sets(1, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(gamma_sets(3, 1, 2), std::invalid_argument);
}

TEST_CASE("gamma signature") {
    const auto t = T("((x x) x (x x))");
    const auto g = gamma_signature(t, LeafSet{0, 2});
    CHECK(g.alpha == 0b011);
    CHECK(g.beta == 0b101);
    const auto h = gamma_signature(t, LeafSet{});
    CHECK(h.alpha == 0);
    CHECK(h.beta == 0b111);
}

TEST_CASE("restricted counts sum to the second kind") {
    BinomialTable table;
    for (std::size_t d = 2; d <= 5; ++d)
        for (const auto& t : enumerate_trees(d)) {
            const std::uint64_t full = (std::uint64_t{1} << t.arity()) - 1;
            for (const auto& [sv, n] : contraction_pair_histogram(t)) {
                Count sum = 0;
                for (std::uint64_t a = 0; a <= full; ++a)
                    for (std::uint64_t b = 0; b <= full; ++b)
                        if ((a | b) == full) sum += table.second_restricted(t, sv.first, sv.second, GammaPair{a, b});
                REQUIRE(sum == n);
            }
        }
}

TEST_CASE("degree-three identities") {
    const auto x = PlanarTree::leaf();
    const auto x_xx = graft({x, PlanarTree::corona(2)});
    const auto xx_x = graft({PlanarTree::corona(2), x});
    const auto c3 = PlanarTree::corona(3);
    BinomialTable table;
    for (std::size_t d = 2; d <= 7; ++d)
        for (const auto& t : enumerate_trees(d)) {
            const auto kids = t.children();
            Count a = 0, b = 0, pairs = 0, triples = 0, singles = 0;
            for (const auto& k : kids) {
                a += table.first(k, x_xx);
                b += table.first(k, xx_x);
                singles += choose(k.degree(), 3);
            }
            for (std::size_t i = 0; i < kids.size(); ++i)
                for (std::size_t j = i + 1; j < kids.size(); ++j) {
                    const auto ni = kids[i].degree(), nj = kids[j].degree();
                    a += ni * choose(nj, 2);
                    b += choose(ni, 2) * nj;
                    pairs += ni * nj * (ni + nj - 2) / 2;
                    for (std::size_t k = j + 1; k < kids.size(); ++k) triples += ni * nj * kids[k].degree();
                }
            CHECK(table.first(t, x_xx) == a);
            CHECK(table.first(t, xx_x) == b);
            // Three leaves in three different components contract to C3.
            CHECK(choose(d, 3) == singles + pairs + triples);
            if (kids.size() == 2) CHECK(choose(d, 3) == singles + pairs);
        }
    // Without the triple term the sum undercounts as soon as the root has arity 3.
    CHECK(binom1(c3, c3) == 1);
}

TEST_CASE("table can be cleared and reused") {
    BinomialTable table;
    const auto t = T("((x x) (x x x))");
    const auto first = table.first(t, T("(x x)"));
    table.clear();
    CHECK(table.first(t, T("(x x)")) == first);
    CHECK(first == choose(5, 2));
}

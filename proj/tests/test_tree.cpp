#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "planar/errors.hpp"
#include "planar/tree.hpp"

using namespace planar;

namespace {

PlanarTree T(const char* text) { return parse_tree(text); }

// Contraction by the literal path-union construction on an explicit vertex
// array, independent of the recursive implementation.
PlanarTree contract_by_paths(const PlanarTree& t, const std::vector<bool>& keep) {
    struct Vertex {
        int parent;
        std::vector<int> children;
        bool is_leaf;
    };
    std::vector<Vertex> vs;
    std::vector<int> leaves;
    std::function<int(const PlanarTree&, int)> build = [&](const PlanarTree& u, int parent) {
        const int id = static_cast<int>(vs.size());
        vs.push_back({parent, {}, u.is_leaf()});
        if (u.is_leaf()) leaves.push_back(id);
        for (const auto& c : u.children()) {
            const int cid = build(c, id);
            vs[id].children.push_back(cid);
        }
        return id;
    };
    build(t, -1);
    std::vector<bool> marked(vs.size(), false);
    for (std::size_t i = 0; i < leaves.size(); ++i)
        if (keep[i])
            for (int v = leaves[i]; v != -1 && !marked[v]; v = vs[v].parent) marked[v] = true;
    if (!marked[0]) return PlanarTree::empty();
    // Rebuild the marked subtree, then suppress every vertex with one marked child.
    std::function<PlanarTree(int)> rebuild = [&](int v) -> PlanarTree {
        if (vs[v].is_leaf) return PlanarTree::leaf();
        std::vector<PlanarTree> kids;
        for (int c : vs[v].children)
            if (marked[c]) kids.push_back(rebuild(c));
        if (kids.size() == 1) return kids.front();
        return graft(kids);
    };
    return rebuild(0);
}

// Little Schroeder numbers by their three-term recurrence; index n = degree.
std::vector<std::uint64_t> schroeder(std::size_t n) {
    std::vector<std::uint64_t> a = {1, 1};
    for (std::uint64_t k = 2; k <= n; ++k)
        a.push_back((3 * (2 * k - 1) * a[k - 1] - (k - 2) * a[k - 2]) / (k + 1));
    std::vector<std::uint64_t> by_degree = {1};
    for (std::size_t d = 1; d <= n; ++d) by_degree.push_back(a[d - 1]);
    return by_degree;
}

} // namespace

TEST_CASE("parse and render") {
    CHECK(T("x") == PlanarTree::leaf());
    CHECK(T("1").is_empty());
    CHECK(T("((x x) x)") == graft({graft({PlanarTree::leaf(), PlanarTree::leaf()}), PlanarTree::leaf()}));
    CHECK(render_tree(PlanarTree::empty()) == "1");
    CHECK(render_tree(PlanarTree::corona(3)) == "(x x x)");
    CHECK(render_tree(graft({PlanarTree::leaf(), PlanarTree::corona(2)})) == "(x (x x))");
    CHECK(render_tree(T("  (  x\t(x   x) )\n")) == "(x (x x))");
    CHECK(render_tree(T("(x(x x))")) == "(x (x x))");
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(T(""), ParseError);
    CHECK_THROWS_AS(T("(x)"), ParseError);
    CHECK_THROWS_AS(T("()"), ParseError);
    CHECK_THROWS_AS(T("(x 1)"), ParseError);
    CHECK_THROWS_AS(T("(x x"), ParseError);
    CHECK_THROWS_AS(T("x x"), ParseError);
    CHECK_THROWS_AS(T("y"), ParseError);
    try {
        T("(x (x) x)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
    try {
        T("(x 1)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
    }
}

TEST_CASE("graft") {
    const auto x = PlanarTree::leaf();
    CHECK(graft({x, x}) == T("(x x)"));
    CHECK(graft({x, x, x}) == PlanarTree::corona(3));
    const auto g = graft({T("(x x)"), x});
    CHECK(render_tree(g) == "((x x) x)");
    CHECK(g.degree() == 3);
    CHECK_THROWS_AS(graft({x}), std::invalid_argument);
    CHECK_THROWS_AS(graft({x, PlanarTree::empty()}), std::invalid_argument);
    CHECK(graft({x, x}).id() == graft({x, x}).id());
}

TEST_CASE("unit product") {
    const auto x = PlanarTree::leaf();
    const auto e = PlanarTree::empty();
    const PlanarTree none[] = {e, e, e};
    const PlanarTree one[] = {e, x, e};
    const PlanarTree two[] = {x, e, T("(x x)")};
    CHECK(unit_product(none).is_empty());
    CHECK(unit_product(one) == x);
    CHECK(unit_product(two) == T("(x (x x))"));
}

TEST_CASE("contract") {
    CHECK(contract(T("((x x) x)"), LeafSet{0, 1}) == T("(x x)"));
    CHECK(contract(T("((x x) x)"), LeafSet{0, 2}) == T("(x x)"));
    CHECK(contract(T("((x x) x)"), LeafSet{}).is_empty());
    CHECK(contract(T("((x x) (x x x))"), LeafSet{1, 2, 4}) == T("(x (x x))"));
    CHECK_THROWS_AS(contract(T("(x x)"), LeafSet{2}), std::out_of_range);
    CHECK_THROWS_AS(contract(PlanarTree::empty(), LeafSet{}), std::invalid_argument);

    for (std::size_t d = 1; d <= 6; ++d)
        for (const auto& t : enumerate_trees(d)) {
            std::size_t singletons = 0;
            for (std::size_t i = 0; i < d; ++i) singletons += contract(t, LeafSet{i}) == PlanarTree::leaf();
            CHECK(singletons == d);
        }
}

TEST_CASE("contract agrees with the path-union construction") {
    for (std::size_t d = 1; d <= 6; ++d)
        for (const auto& t : enumerate_trees(d))
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
                std::vector<bool> keep(d);
                for (std::size_t i = 0; i < d; ++i) keep[i] = ((mask >> i) & 1U) != 0;
                REQUIRE(contract(t, LeafSet(mask)) == contract_by_paths(t, keep));
            }
}

TEST_CASE("contraction invariants") {
    SUBCASE("full leaf set is the identity, degree <= 8") {
        for (std::size_t d = 1; d <= 8; ++d)
            for (const auto& t : enumerate_trees(d)) REQUIRE(contract(t, LeafSet::all(d)) == t);
    }
    SUBCASE("degree equals subset size and contractions compose, degree <= 6") {
        for (std::size_t d = 1; d <= 6; ++d)
            for (const auto& t : enumerate_trees(d)) {
                const auto all = LeafSet::all(d).mask();
                for (std::uint64_t i = 0; i <= all; ++i) {
                    const auto ti = contract(t, LeafSet(i));
                    REQUIRE(ti.degree() == LeafSet(i).size());
                    // J ranges over subsets of I, re-indexed through I's order.
                    for (std::uint64_t j = i;; j = (j - 1) & i) {
                        LeafSet reindexed;
                        std::size_t pos = 0;
                        for (std::size_t leaf = 0; leaf < d; ++leaf) {
                            if (((i >> leaf) & 1U) == 0) continue;
                            if (((j >> leaf) & 1U) != 0) reindexed.insert(pos);
                            ++pos;
                        }
                        const auto lhs = ti.is_empty() ? ti : contract(ti, reindexed);
                        REQUIRE(lhs == contract(t, LeafSet(j)));
                        if (j == 0) break;
                    }
                }
            }
    }
}

TEST_CASE("substitute") {
    const auto e = PlanarTree::empty();
    const auto x = PlanarTree::leaf();
    const auto xx = T("(x x)");
    {
        const PlanarTree a[] = {e, e};
        CHECK(substitute(xx, a).is_empty());
    }
    {
        const PlanarTree a[] = {xx, e};
        CHECK(substitute(xx, a) == xx);
    }
    {
        const PlanarTree a[] = {x, xx};
        CHECK(substitute(xx, a) == T("(x (x x))"));
    }
    {
        const PlanarTree a[] = {e, T("(x x x)"), e};
        CHECK(substitute(T("((x x) x)"), a) == T("(x x x)"));
    }
    {
        const PlanarTree a[] = {x};
        CHECK_THROWS_AS(substitute(xx, a), std::invalid_argument);
    }
    // Units at the complement of I reproduce the contraction onto I.
    for (std::size_t d = 1; d <= 5; ++d)
        for (const auto& t : enumerate_trees(d))
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
                std::vector<PlanarTree> a(d);
                for (std::size_t i = 0; i < d; ++i) a[i] = ((mask >> i) & 1U) != 0 ? x : e;
                REQUIRE(substitute(t, a) == contract(t, LeafSet(mask)));
            }
}

TEST_CASE("enumeration") {
    CHECK(enumerate_trees(0) == std::vector<PlanarTree>{PlanarTree::empty()});
    CHECK(enumerate_trees(1) == std::vector<PlanarTree>{PlanarTree::leaf()});
    CHECK(enumerate_trees(2) == std::vector<PlanarTree>{T("(x x)")});
    CHECK(enumerate_trees(4).size() == 11);

    const auto expected = schroeder(8);
    CHECK(expected == std::vector<std::uint64_t>{1, 1, 1, 3, 11, 45, 197, 903, 4279});
    for (std::size_t d = 0; d <= 8; ++d) {
        const auto trees = enumerate_trees(d);
        CHECK(trees.size() == expected[d]);
        CHECK(std::is_sorted(trees.begin(), trees.end()));
        CHECK(std::adjacent_find(trees.begin(), trees.end()) == trees.end());
        for (const auto& t : trees) REQUIRE(t.degree() == d);
    }
    const auto three = enumerate_trees(3);
    CHECK(render_tree(three[0]) == "(x (x x))");
    CHECK(render_tree(three[1]) == "((x x) x)");
    CHECK(render_tree(three[2]) == "(x x x)");
    CHECK_THROWS_AS(enumerate_trees(13), ResourceError);
    CHECK(enumerate_trees(3, 3).size() == 3);
}

TEST_CASE("parse and render round trip, degree <= 8") {
    for (std::size_t d = 0; d <= 8; ++d)
        for (const auto& t : enumerate_trees(d)) REQUIRE(parse_tree(render_tree(t)) == t);
}

TEST_CASE("canonical order") {
    CHECK(PlanarTree::empty() < PlanarTree::leaf());
    CHECK(T("((x x) x)") < T("(x x x)"));
    CHECK(T("(x (x x))") < T("((x x) x)"));
    CHECK(T("(x x)") < T("(x x x)"));
    auto three = enumerate_trees(3);
    auto sorted = three;
    std::stable_sort(sorted.begin(), sorted.end());
    CHECK(sorted == three);
}

TEST_CASE("arity profiles") {
    const auto p = arity_profile(T("((x x) x)"));
    CHECK(p.count(2) == 2);
    CHECK(p.degree == 3);
    CHECK(p.total_vertices == 5);
    const auto c = arity_profile(PlanarTree::corona(5));
    CHECK(c.count(5) == 1);
    CHECK(c.degree == 5);
    CHECK(c.nu.size() == 1);
    CHECK(arity_profile(PlanarTree::leaf()) == ArityProfile::from_counts({}));

    for (std::size_t d = 1; d <= 8; ++d)
        for (const auto& t : enumerate_trees(d)) {
            const auto q = arity_profile(t);
            std::size_t weighted = 0;
            std::size_t inner = 0;
            for (const auto& [k, n] : q.nu) {
                weighted += (k - 1) * n;
                inner += n;
            }
            REQUIRE(weighted == q.degree - 1);
            REQUIRE(q.total_vertices == q.degree + inner);
            REQUIRE(ArityProfile::from_counts(q.nu) == q);
        }
}

TEST_CASE("profile enumeration and Catalan numbers of profiles") {
    const auto binary2 = ArityProfile::from_counts({{2, 2}});
    const auto trees = enumerate_profile(binary2);
    REQUIRE(trees.size() == 2);
    CHECK(render_tree(trees[0]) == "(x (x x))");
    CHECK(render_tree(trees[1]) == "((x x) x)");
    CHECK(catalan(binary2) == 2);

    const auto c3 = ArityProfile::from_counts({{3, 1}});
    CHECK(enumerate_profile(c3) == std::vector<PlanarTree>{PlanarTree::corona(3)});
    CHECK(catalan(c3) == 1);

    // Binary profiles give the classical Catalan numbers.
    const std::uint64_t classical[] = {1, 1, 2, 5, 14, 42, 132};
    for (std::size_t k = 0; k <= 6; ++k)
        CHECK(catalan(ArityProfile::from_counts({{2, k}})) == classical[k]);

    for (std::size_t d = 1; d <= 7; ++d) {
        std::uint64_t total = 0;
        for (const auto& nu : profiles_of_degree(d)) {
            CHECK(nu.degree == d);
            CHECK(catalan(nu) == enumerate_profile(nu).size());
            total += catalan(nu);
        }
        CHECK(total == enumerate_trees(d).size());
    }
    std::uint64_t four = 0;
    for (const auto& nu : profiles_of_degree(4)) four += catalan(nu);
    CHECK(four == 11);
}

TEST_CASE("leaf sets") {
    LeafSet s{0, 3};
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(1));
    CHECK(s.size() == 2);
    CHECK(s.complement(4) == LeafSet{1, 2});
    CHECK(LeafSet::all(64).size() == 64);
    CHECK_THROWS_AS(LeafSet::all(65), ResourceError);
    CHECK_THROWS_AS(s.insert(64), std::out_of_range);
}

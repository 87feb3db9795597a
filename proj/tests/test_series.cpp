#include <doctest.h>

#include <vector>

#include "planar/binomial.hpp"
#include "planar/series.hpp"

using namespace planar;

namespace {

PlanarTree T(const char* text) { return parse_tree(text); }

Rational R(long p, long q = 1) { return make_rational(p, q); }

PlanarSeries series(std::initializer_list<std::pair<const char*, Rational>> terms) {
    PlanarSeries f;
    for (const auto& [t, c] : terms) f.add_term(T(t), c);
    return f;
}

// f^t by expanding the multilinear product: every assignment of terms of f to
// the leaves of t, contracted with substitute.
PlanarSeries power_by_assignments(const PlanarSeries& f, const PlanarTree& t) {
    const std::vector<std::pair<PlanarTree, Rational>> terms(f.terms().begin(), f.terms().end());
    PlanarSeries out;
    std::vector<std::size_t> pick(t.degree(), 0);
    std::vector<PlanarTree> assignment(t.degree());
    while (true) {
        Rational c = 1;
        for (std::size_t i = 0; i < pick.size(); ++i) {
            assignment[i] = terms[pick[i]].first;
            c *= terms[pick[i]].second;
        }
        out.add_term(substitute(t, assignment), c);
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == terms.size()) pick[i++] = 0;
        if (i == pick.size()) break;
    }
    return out;
}

} // namespace

TEST_CASE("series basics") {
    auto f = series({{"1", R(1)}, {"x", R(1, 2)}, {"(x x)", R(-3)}});
    CHECK(f.size() == 3);
    CHECK(f.coeff(T("x")) == R(1, 2));
    CHECK(f.coeff(T("(x x x)")) == 0);
    CHECK(f.constant_term() == 1);
    CHECK(f.max_degree() == 2);
    f.add_term(T("x"), R(-1, 2));
    CHECK(f.size() == 2);
    CHECK(f.homogeneous_part(2) == series({{"(x x)", R(-3)}}));
    CHECK(f.truncated(1) == PlanarSeries::monomial(T("1"), 1, 1));
    CHECK(f.truncated(1).truncation() == 1);
    CHECK(PlanarSeries().is_zero());

    PlanarSeries g(2);
    g.add_term(T("(x x x)"), 5);
    CHECK(g.is_zero());
}

TEST_CASE("linear operations") {
    const auto f = series({{"x", R(1)}, {"(x x)", R(2)}});
    const auto g = series({{"x", R(-1)}, {"(x x x)", R(1, 3)}});
    CHECK(add(f, g) == series({{"(x x)", R(2)}, {"(x x x)", R(1, 3)}}));
    CHECK(subtract(f, f).is_zero());
    CHECK(scale(f, R(1, 2)) == series({{"x", R(1, 2)}, {"(x x)", R(1)}}));
    CHECK(scale(f, 0).is_zero());
    CHECK(add(f, g.truncated(1)).truncation() == 1);
    CHECK(agree_through(f, add(f, series({{"(x x x)", R(1)}})), 2));
    CHECK_FALSE(agree_through(f, add(f, series({{"(x x x)", R(1)}})), 3));
}

TEST_CASE("products") {
    const auto one_plus_x = PlanarSeries::one_plus_x();
    CHECK(mul(one_plus_x, one_plus_x) == series({{"1", R(1)}, {"x", R(2)}, {"(x x)", R(1)}}));
    CHECK(mul(PlanarSeries::x(), PlanarSeries::x()) == series({{"(x x)", R(1)}}));
    CHECK(mul(PlanarSeries::one(), series({{"(x x)", R(3)}})) == series({{"(x x)", R(3)}}));

    const PlanarSeries three[] = {PlanarSeries::x(), one_plus_x, PlanarSeries::x()};
    CHECK(mul(three) == series({{"(x x)", R(1)}, {"(x x x)", R(1)}}));
    CHECK(mul(three, 2) == series({{"(x x)", R(1)}}).truncated(2));
    CHECK(mul(three, 2).truncation() == 2);

    const PlanarSeries single[] = {one_plus_x};
    CHECK_THROWS_AS(mul(single), std::invalid_argument);
}

TEST_CASE("power of 1 + x is the row of first-kind binomials") {
    BinomialTable table;
    for (std::size_t d = 1; d <= 6; ++d)
        for (const auto& t : enumerate_trees(d)) {
            PlanarSeries row;
            for (std::size_t e = 0; e <= d; ++e)
                for (const auto& s : enumerate_trees(e))
                    row.add_term(s, Rational(static_cast<unsigned long>(table.first(t, s))));
            REQUIRE(power(PlanarSeries::one_plus_x(), t) == row);
        }
}

TEST_CASE("power agrees with the assignment expansion") {
    const PlanarSeries bases[] = {
        PlanarSeries::one_plus_x(),
        series({{"1", R(2)}, {"x", R(-1, 3)}, {"(x x)", R(5, 2)}}),
        series({{"x", R(1)}, {"(x x x)", R(-2)}}),
        series({{"1", R(1, 2)}, {"(x (x x))", R(3)}}),
    };
    for (const auto& f : bases)
        for (std::size_t d = 1; d <= 5; ++d)
            for (const auto& t : enumerate_trees(d)) REQUIRE(power(f, t) == power_by_assignments(f, t));
}

TEST_CASE("truncated powers") {
    const auto f = series({{"1", R(1)}, {"x", R(1)}, {"(x x)", R(1, 2)}});
    for (std::size_t d = 1; d <= 4; ++d)
        for (const auto& t : enumerate_trees(d)) {
            const auto full = power(f, t);
            for (std::size_t n = 0; n <= 5; ++n) {
                const auto cut = power(f, t, n);
                CHECK(cut.truncation() == n);
                CHECK(cut == full.truncated(n));
                CHECK(power(f.truncated(n), t) == full.truncated(n));
            }
        }
    CHECK_THROWS_AS(power(f, PlanarTree::empty()), std::invalid_argument);
    CHECK(power(f, PlanarTree::leaf()) == f);
}

TEST_CASE("tree powers") {
    CHECK(tree_power(T("(x x)"), T("(x x)")) == T("((x x) (x x))"));
    CHECK(tree_power(T("x"), T("((x x) x)")) == T("((x x) x)"));
    CHECK(tree_power(T("(x x x)"), T("x")) == T("(x x x)"));
    CHECK(tree_power(T("(x x)"), T("(x x)")).degree() == 4);
    CHECK_THROWS_AS(tree_power(PlanarTree::empty(), T("x")), std::invalid_argument);
}

TEST_CASE("composition") {
    const auto f = series({{"1", R(3)}, {"x", R(1)}, {"(x x)", R(2)}});
    const auto g = series({{"x", R(1)}, {"(x x)", R(-1)}});
    // x o g = g and f o x = f.
    CHECK(compose(PlanarSeries::x(), g) == g);
    CHECK(compose(f, PlanarSeries::x()) == f);
    // (x x) o g = g * g.
    const auto expected = add(add(PlanarSeries::monomial(T("1"), 3), g), scale(mul(g, g), 2));
    CHECK(compose(f, g) == expected);
    CHECK(compose(f, g, 2) == expected.truncated(2));
    CHECK_THROWS_AS(compose(f, PlanarSeries::one_plus_x()), std::invalid_argument);
}

TEST_CASE("derivation") {
    CHECK(derive(PlanarSeries::monomial(T("((x x) x)"))) == series({{"(x x)", R(3)}}));
    CHECK(derive(PlanarSeries::monomial(T("(x x x)"))) == series({{"(x x)", R(3)}}));
    CHECK(derive(PlanarSeries::monomial(T("((x x) (x x))"))) ==
          series({{"(x (x x))", R(2)}, {"((x x) x)", R(2)}}));
    CHECK(derive(PlanarSeries::x()) == PlanarSeries::one());
    CHECK(derive(PlanarSeries::one()).is_zero());
    CHECK(derive(PlanarSeries::one_plus_x().truncated(1)).truncation() == 0);

    // Product rule for the binary product.
    const PlanarSeries fs[] = {series({{"x", R(2)}, {"(x x)", R(1)}}),
                               series({{"1", R(1)}, {"(x (x x))", R(-1, 2)}}),
                               series({{"x", R(1)}, {"(x x x)", R(3)}})};
    for (const auto& f : fs)
        for (const auto& g : fs)
            CHECK(derive(mul(f, g)) == add(mul(derive(f), g), mul(f, derive(g))));
}

TEST_CASE("co-addition") {
    const auto d = coaddition(T("(x x)"));
    CHECK(d.terms().size() == 3);
    CHECK(d.coeff(T("(x x)"), T("1")) == 1);
    CHECK(d.coeff(T("x"), T("x")) == 2);
    CHECK(d.coeff(T("1"), T("(x x)")) == 1);
    CHECK(coaddition(PlanarTree::empty()).coeff(T("1"), T("1")) == 1);

    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& t : enumerate_trees(n)) {
            const auto comb = coaddition(t);
            REQUIRE(coaddition_structural(t) == comb);
            REQUIRE(comb.swapped() == comb);
            Rational total = 0;
            for (const auto& [k, c] : comb.terms()) total += c;
            CHECK(total == Rational(static_cast<unsigned long>(std::uint64_t{1} << n)));
        }

    const auto f = series({{"x", R(1, 2)}, {"(x x)", R(3)}});
    const auto df = delta(f);
    CHECK(df.coeff(T("x"), T("1")) == R(1, 2));
    CHECK(df.coeff(T("x"), T("x")) == 6);
}

TEST_CASE("delta is multiplicative") {
    const auto f = series({{"x", R(1)}, {"(x x)", R(2)}});
    const auto g = series({{"1", R(1)}, {"x", R(-1, 3)}});
    const auto lhs = delta(mul(f, g));
    const TensorSeries parts[] = {delta(f), delta(g)};
    CHECK(lhs == mul(parts));
    const auto t = T("((x x) x)");
    CHECK(delta(power(f, t)) == power(delta(f), t));
}

TEST_CASE("classical image") {
    const auto f = series({{"1", R(1)}, {"x", R(2)}, {"(x x)", R(1)}, {"(x x x)", R(1, 2)}, {"((x x) x)", R(1, 2)}});
    const auto c = to_classical(f, 3);
    CHECK(c.coeffs == std::vector<Rational>{R(1), R(2), R(1), R(1)});
    CHECK(to_classical(f, 1).coeffs.size() == 2);
    CHECK_THROWS_AS(to_classical(f.truncated(2), 3), std::invalid_argument);

    // The image of a product is the product of the images.
    const auto g = series({{"1", R(1, 3)}, {"x", R(-1)}, {"(x (x x))", R(4)}});
    for (const auto& [u, v] : std::vector<std::pair<PlanarSeries, PlanarSeries>>{{f, g}, {g, f}, {g, g}})
        CHECK(to_classical(mul(u, v), 6) == classical_product(to_classical(u, 6), to_classical(v, 6)));
    // (1 + y)^n from any tree of degree n.
    for (const auto& t : enumerate_trees(4))
        CHECK(to_classical(power(PlanarSeries::one_plus_x(), t), 4).coeffs ==
              std::vector<Rational>{R(1), R(4), R(6), R(4), R(1)});
}

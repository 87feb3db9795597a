#include "planar/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "planar/binomial.hpp"
#include "planar/roots.hpp"
#include "planar/series.hpp"
#include "planar/tree.hpp"

namespace planar::verify {

namespace {

class Check {
public:
    Check(std::string suite, std::string name) {
        result_.suite = std::move(suite);
        result_.name = std::move(name);
    }

    // Counts one case; records the first failure. Returns ok.
    bool expect(bool ok, const std::function<std::string()>& describe) {
        ++result_.cases;
        if (!ok && !result_.counterexample) result_.counterexample = describe();
        return ok;
    }

    CheckResult result() const { return result_; }

private:
    CheckResult result_;
};

using Trees = std::vector<std::vector<PlanarTree>>;

Trees trees_through(std::size_t n) {
    Trees out;
    for (std::size_t d = 0; d <= n; ++d) out.push_back(enumerate_trees(d, std::max(n, default_enumeration_cap)));
    return out;
}

std::string show(const PlanarTree& t) { return render_tree(t); }

std::string show(const PlanarSeries& f) {
    std::string out;
    for (const auto& [t, c] : f.terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(c) + "*" + render_tree(t);
    }
    return out.empty() ? "0" : out;
}

Count choose(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Count out = 1;
    for (std::size_t i = 0; i < k; ++i) out = out * (n - i) / (i + 1);
    return out;
}

// Small pseudorandom polynomial over the trees 1, x, (x x), (x x x) with
// coefficients p/q, |p| <= 5, 1 <= q <= 4. Deterministic for a given seed.
PlanarSeries sparse_polynomial(std::uint64_t seed, bool constant_term) {
    std::mt19937_64 rng(seed);
    const PlanarTree pool[] = {PlanarTree::leaf(), PlanarTree::corona(2), PlanarTree::corona(3),
                               graft({PlanarTree::corona(2), PlanarTree::leaf()})};
    PlanarSeries f;
    if (constant_term) f.add_term(PlanarTree::empty(), 1);
    for (int i = 0; i < 2; ++i) {
        const auto& t = pool[rng() % 4];
        long p = static_cast<long>(rng() % 11) - 5;
        if (p == 0) p = 1;
        const long q = static_cast<long>(rng() % 4) + 1;
        f.add_term(t, make_rational(p, q));
    }
    return f;
}

PlanarSeries binomial_row(BinomialTable& table, const PlanarTree& t, const Trees& trees) {
    PlanarSeries out;
    for (std::size_t d = 0; d <= t.degree(); ++d)
        for (const auto& s : trees[d]) out.add_term(s, Rational(static_cast<unsigned long>(table.first(t, s))));
    return out;
}

// --- binom1 ------------------------------------------------------------------

std::vector<CheckResult> suite_binom1(std::size_t n) {
    const auto trees = trees_through(n + 1);
    BinomialTable table;
    std::vector<CheckResult> out;

    Check oracle("binom1", "oracle_equivalence");
    [&] {
        for (std::size_t d = 0; d <= n; ++d)
            for (const auto& t : trees[d]) {
                const auto hist = contraction_histogram(t);
                for (std::size_t e = 0; e <= d; ++e)
                    for (const auto& s : trees[e]) {
                        auto it = hist.find(s);
                        const Count expected = it == hist.end() ? 0 : it->second;
                        const Count got = table.first(t, s);
                        if (!oracle.expect(got == expected, [&] {
                                return "t=" + show(t) + " s=" + show(s) + " recursion=" +
                                       std::to_string(got) + " oracle=" + std::to_string(expected);
                            }))
                            return;
                    }
            }
    }();
    out.push_back(oracle.result());

    Check bound("binom1", "zero_above_degree");
    [&] {
        for (std::size_t d = 0; d <= n; ++d)
            for (const auto& t : trees[d])
                for (const auto& s : trees[d + 1])
                    if (!bound.expect(table.first(t, s) == 0, [&] { return "t=" + show(t) + " s=" + show(s); }))
                        return;
    }();
    out.push_back(bound.result());

    Check top("binom1", "equal_degree_is_identity");
    [&] {
        for (std::size_t d = 0; d <= n; ++d)
            for (const auto& t : trees[d])
                for (const auto& s : trees[d])
                    if (!top.expect(table.first(t, s) == (s == t ? 1U : 0U),
                                    [&] { return "t=" + show(t) + " s=" + show(s); }))
                        return;
    }();
    out.push_back(top.result());

    Check small("binom1", "unit_leaf_and_pair");
    [&] {
        const auto pair = PlanarTree::corona(2);
        for (std::size_t d = 0; d <= n; ++d)
            for (const auto& t : trees[d]) {
                const bool ok = table.first(t, PlanarTree::empty()) == 1 &&
                                table.first(t, PlanarTree::leaf()) == d &&
                                table.first(t, pair) == choose(d, 2);
                if (!small.expect(ok, [&] { return "t=" + show(t); })) return;
            }
    }();
    out.push_back(small.result());

    Check rows("binom1", "degree_row_sums");
    [&] {
        for (std::size_t d = 0; d <= n; ++d)
            for (const auto& t : trees[d])
                for (std::size_t m = 0; m <= d; ++m) {
                    Count sum = 0;
                    for (const auto& s : trees[m]) sum += table.first(t, s);
                    if (!rows.expect(sum == choose(d, m), [&] {
                            return "t=" + show(t) + " m=" + std::to_string(m) + " sum=" + std::to_string(sum);
                        }))
                        return;
                }
    }();
    out.push_back(rows.result());
    return out;
}

// --- binom2 ------------------------------------------------------------------

std::vector<CheckResult> suite_binom2(std::size_t n) {
    const auto trees = trees_through(n);
    BinomialTable table;
    std::vector<CheckResult> out;

    Check oracle("binom2", "oracle_equivalence");
    Check symmetry("binom2", "symmetry");
    Check marginal("binom2", "marginal_sum");
    [&] {
        for (std::size_t d = 0; d <= n; ++d)
            for (const auto& t : trees[d]) {
                const auto hist = contraction_pair_histogram(t);
                std::map<PlanarTree, Count> sums;
                for (std::size_t e = 0; e <= d; ++e)
                    for (const auto& s : trees[e])
                        for (const auto& v : trees[d - e]) {
                            auto it = hist.find({s, v});
                            const Count expected = it == hist.end() ? 0 : it->second;
                            const Count got = table.second(t, s, v);
                            sums[s] += got;
                            auto describe = [&] {
                                return "t=" + show(t) + " s=" + show(s) + " v=" + show(v) + " recursion=" +
                                       std::to_string(got) + " oracle=" + std::to_string(expected);
                            };
                            if (!oracle.expect(got == expected, describe)) return;
                            if (!symmetry.expect(got == table.second(t, v, s), describe)) return;
                        }
                for (const auto& [s, sum] : sums)
                    if (!marginal.expect(sum == table.first(t, s), [&] { return "t=" + show(t) + " s=" + show(s); }))
                        return;
            }
    }();
    out.push_back(oracle.result());
    out.push_back(symmetry.result());
    out.push_back(marginal.result());

    Check off("binom2", "zero_off_degree");
    [&] {
        const auto limit = std::min<std::size_t>(n, 4);
        for (std::size_t d = 0; d <= limit; ++d)
            for (const auto& t : trees[d])
                for (std::size_t e = 0; e <= d; ++e)
                    for (std::size_t f = 0; f <= d; ++f) {
                        if (e + f == d) continue;
                        for (const auto& s : trees[e])
                            for (const auto& v : trees[f])
                                if (!off.expect(table.second(t, s, v) == 0, [&] {
                                        return "t=" + show(t) + " s=" + show(s) + " v=" + show(v);
                                    }))
                                    return;
                    }
    }();
    out.push_back(off.result());

    Check gamma("binom2", "gamma_partition");
    [&] {
        const auto limit = std::min<std::size_t>(n, 6);
        for (std::size_t d = 2; d <= limit; ++d)
            for (const auto& t : trees[d]) {
                struct Key {
                    PlanarTree s, v;
                    std::uint64_t a, b;
                    auto operator<=>(const Key&) const = default;
                };
                std::map<Key, Count> counts;
                const auto all = LeafSet::all(d).mask();
                for (std::uint64_t mask = 0; mask <= all; ++mask) {
                    const auto g = gamma_signature(t, LeafSet(mask));
                    ++counts[{contract(t, LeafSet(mask)), contract(t, LeafSet(all & ~mask)), g.alpha, g.beta}];
                }
                for (const auto& [k, c] : counts) {
                    const auto got = table.second_restricted(t, k.s, k.v, GammaPair{k.a, k.b});
                    if (!gamma.expect(got == c, [&] {
                            return "t=" + show(t) + " s=" + show(k.s) + " v=" + show(k.v) + " alpha=" +
                                   std::to_string(k.a) + " beta=" + std::to_string(k.b);
                        }))
                        return;
                }
            }
    }();
    out.push_back(gamma.result());

    Check card("binom2", "gamma_cardinality");
    [&] {
        for (std::size_t m = 2; m <= 6; ++m)
            for (std::size_t r = 2; r <= 6; ++r)
                for (std::size_t s = 2; s <= 6; ++s) {
                    const auto sets = gamma_sets(m, r, s);
                    Count expected = 0;
                    if (r + s >= m && r <= m && s <= m) expected = choose(m, r) * choose(r, r + s - m);
                    const bool ok = sets.star.size() == expected &&
                                    sets.prime.size() + sets.double_prime.size() + sets.star.size() ==
                                        sets.all.size();
                    if (!card.expect(ok, [&] {
                            return "m=" + std::to_string(m) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
                        }))
                        return;
                }
    }();
    out.push_back(card.result());
    return out;
}

// --- powers ------------------------------------------------------------------

std::vector<CheckResult> suite_powers(std::size_t n) {
    const auto trees = trees_through(n);
    BinomialTable table;
    std::vector<CheckResult> out;
    const auto one_plus_x = PlanarSeries::one_plus_x();

    Check theorem("powers", "binomial_theorem");
    [&] {
        for (std::size_t d = 1; d <= n; ++d)
            for (const auto& t : trees[d]) {
                const auto lhs = power(one_plus_x, t);
                const auto rhs = binomial_row(table, t, trees);
                if (!theorem.expect(lhs == rhs, [&] { return "t=" + show(t) + " power=" + show(lhs); })) return;
            }
    }();
    out.push_back(theorem.result());

    Check shifted("powers", "shifted_binomial_theorem");
    [&] {
        const auto limit = std::min<std::size_t>(n, 4);
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            const auto g = sparse_polynomial(seed, false);
            const auto one_plus_g = add(PlanarSeries::one(), g);
            for (std::size_t d = 1; d <= limit; ++d)
                for (const auto& t : trees[d]) {
                    PlanarSeries rhs;
                    for (std::size_t e = 0; e <= d; ++e)
                        for (const auto& s : trees[e]) {
                            const auto k = table.first(t, s);
                            if (k == 0) continue;
                            const auto term = s.is_empty() ? PlanarSeries::one() : power(g, s);
                            rhs = add(rhs, scale(term, Rational(static_cast<unsigned long>(k))));
                        }
                    if (!shifted.expect(power(one_plus_g, t) == rhs,
                                        [&] { return "t=" + show(t) + " g=" + show(g); }))
                        return;
                }
        }
    }();
    out.push_back(shifted.result());

    Check assoc("powers", "power_of_power");
    [&] {
        const PlanarSeries bases[] = {one_plus_x, sparse_polynomial(11, true), sparse_polynomial(12, false)};
        for (std::size_t dt = 1; dt <= n; ++dt)
            for (std::size_t ds = 1; dt * ds <= n; ++ds)
                for (const auto& t : trees[dt])
                    for (const auto& s : trees[ds]) {
                        const auto ts = tree_power(t, s);
                        for (const auto& f : bases)
                            if (!assoc.expect(power(power(f, t), s) == power(f, ts), [&] {
                                    return "t=" + show(t) + " s=" + show(s) + " f=" + show(f);
                                }))
                                return;
                        // Row of binomials of t raised to s is the row of t^s.
                        if (!assoc.expect(power(binomial_row(table, t, trees), s) == power(one_plus_x, ts),
                                          [&] { return "binomial row t=" + show(t) + " s=" + show(s); }))
                            return;
                    }
    }();
    out.push_back(assoc.result());

    Check unit("powers", "unit_law");
    [&] {
        const auto g = sparse_polynomial(7, true);
        for (std::size_t m = 2; m <= std::max<std::size_t>(n, 2); ++m)
            for (std::size_t i = 0; i < m; ++i) {
                std::vector<PlanarSeries> parts(m, PlanarSeries::one());
                parts[i] = g;
                if (!unit.expect(mul(parts) == g, [&] {
                        return "m=" + std::to_string(m) + " position=" + std::to_string(i);
                    }))
                    return;
            }
    }();
    out.push_back(unit.result());
    return out;
}

// --- delta -------------------------------------------------------------------

using Triple = std::map<std::tuple<PlanarTree, PlanarTree, PlanarTree>, Rational>;

Triple delta_left(const TensorSeries& x) {
    Triple out;
    for (const auto& [k, c] : x.terms()) {
        const auto split = coaddition(k.first);
        for (const auto& [k2, c2] : split.terms())
            out[{k2.first, k2.second, k.second}] += c * c2;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

Triple delta_right(const TensorSeries& x) {
    Triple out;
    for (const auto& [k, c] : x.terms()) {
        const auto split = coaddition(k.second);
        for (const auto& [k2, c2] : split.terms())
            out[{k.first, k2.first, k2.second}] += c * c2;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

std::vector<CheckResult> suite_delta(std::size_t n) {
    const auto trees = trees_through(n);
    BinomialTable table;
    std::vector<CheckResult> out;

    Check routes("delta", "structural_equals_combinatorial");
    Check binom("delta", "coefficients_are_binom2");
    [&] {
        for (std::size_t d = 0; d <= n; ++d)
            for (const auto& t : trees[d]) {
                const auto comb = coaddition(t);
                if (!routes.expect(coaddition_structural(t) == comb, [&] { return "t=" + show(t); })) return;
                for (std::size_t e = 0; e <= d; ++e)
                    for (const auto& s : trees[e])
                        for (const auto& v : trees[d - e])
                            if (!binom.expect(comb.coeff(s, v) == Rational(static_cast<unsigned long>(
                                                                     table.second(t, s, v))),
                                              [&] { return "t=" + show(t) + " s=" + show(s) + " v=" + show(v); }))
                                return;
            }
    }();
    out.push_back(routes.result());
    out.push_back(binom.result());

    Check co("delta", "coassociative_and_cocommutative");
    [&] {
        const auto limit = std::min<std::size_t>(n, 5);
        for (std::size_t d = 0; d <= limit; ++d)
            for (const auto& t : trees[d]) {
                const auto dt = coaddition(t);
                const bool ok = delta_left(dt) == delta_right(dt) && dt.swapped() == dt;
                if (!co.expect(ok, [&] { return "t=" + show(t); })) return;
            }
    }();
    out.push_back(co.result());
    return out;
}

// --- derive ------------------------------------------------------------------

std::vector<CheckResult> suite_derive(std::size_t n) {
    const auto trees = trees_through(n);
    BinomialTable table;
    std::vector<CheckResult> out;

    Check formula("derive", "derivative_is_binomial_row");
    [&] {
        for (std::size_t d = 1; d <= n; ++d)
            for (const auto& t : trees[d]) {
                PlanarSeries expected;
                for (const auto& u : trees[d - 1])
                    expected.add_term(u, Rational(static_cast<unsigned long>(table.first(t, u))));
                const auto got = derive(PlanarSeries::monomial(t));
                if (!formula.expect(got == expected, [&] { return "t=" + show(t) + " got=" + show(got); }))
                    return;
            }
    }();
    out.push_back(formula.result());

    Check leibniz("derive", "product_rule");
    [&] {
        for (std::size_t d = 2; d <= n; ++d)
            for (const auto& t : trees[d]) {
                std::vector<PlanarSeries> parts;
                for (const auto& c : t.children()) parts.push_back(PlanarSeries::monomial(c));
                PlanarSeries expected;
                for (std::size_t i = 0; i < parts.size(); ++i) {
                    auto term = parts;
                    term[i] = derive(parts[i]);
                    expected = add(expected, mul(term));
                }
                if (!leibniz.expect(derive(PlanarSeries::monomial(t)) == expected,
                                    [&] { return "t=" + show(t); }))
                    return;
            }
    }();
    out.push_back(leibniz.result());
    return out;
}

// --- roots -------------------------------------------------------------------

bool is_binary(const PlanarTree& t) {
    const auto p = arity_profile(t);
    return p.nu.empty() || (p.nu.size() == 1 && p.nu.begin()->first == 2);
}

std::vector<CheckResult> suite_roots(std::size_t n) {
    const auto trees = trees_through(n);
    std::vector<CheckResult> out;
    const auto one_plus_x = PlanarSeries::one_plus_x();

    Check square("roots", "square_root_closed_form");
    [&] {
        const auto f = root(PlanarTree::corona(2), n);
        for (std::size_t d = 1; d <= n; ++d)
            for (const auto& t : trees[d]) {
                Rational expected(0);
                if (is_binary(t)) {
                    expected = pow(Rational(2), -static_cast<long>(2 * d - 1));
                    if (d % 2 == 0) expected = -expected;
                }
                if (!square.expect(f.coeff(t) == expected, [&] {
                        return "t=" + show(t) + " solver=" + to_string(f.coeff(t)) + " closed=" + to_string(expected);
                    }))
                    return;
            }
    }();
    out.push_back(square.result());

    Check corona("roots", "corona_closed_form");
    [&] {
        for (std::size_t c = 2; c <= 4; ++c) {
            const auto f = root(PlanarTree::corona(c), n);
            for (std::size_t d = 1; d <= n; ++d)
                for (const auto& t : trees[d])
                    if (!corona.expect(f.coeff(t) == corona_root_coeff(c, t), [&] {
                            return "d=" + std::to_string(c) + " t=" + show(t) + " solver=" + to_string(f.coeff(t)) +
                                   " closed=" + to_string(corona_root_coeff(c, t));
                        }))
                        return;
        }
    }();
    out.push_back(corona.result());

    Check unnormalized("roots", "unnormalized_closed_form_disagrees");
    unnormalized.expect(corona_root_coeff_unnormalized(2, PlanarTree::corona(2)) !=
                            root(PlanarTree::corona(2), 2).coeff(PlanarTree::corona(2)),
                        [] { return std::string("unnormalized formula matched the solver at d=2, (x x)"); });
    out.push_back(unnormalized.result());

    Check defining("roots", "defining_equations");
    [&] {
        const auto limit = std::min<std::size_t>(n, 4);
        for (std::size_t d = 2; d <= limit; ++d)
            for (const auto& t : trees[d]) {
                const auto f = root(t, n);
                if (!defining.expect(agree_through(power(f, t, n), one_plus_x, n),
                                     [&] { return "root t=" + show(t); }))
                    return;
            }
        for (std::size_t d = 2; d <= std::min<std::size_t>(limit, 3); ++d)
            for (const auto& t : trees[d])
                for (std::size_t e = 1; e <= 3 && e <= n; ++e)
                    for (const auto& s : trees[e]) {
                        const auto f = generalized_root(t, s, n);
                        if (!defining.expect(agree_through(power(f, t, n), power(one_plus_x, s), n),
                                             [&] { return "generalized root t=" + show(t) + " s=" + show(s); }))
                            return;
                    }
    }();
    out.push_back(defining.result());

    Check expo("roots", "exp_log");
    [&] {
        const auto limit = std::min<std::size_t>(n, 3);
        for (std::size_t d = 2; d <= limit; ++d)
            for (const auto& t : trees[d]) {
                const auto e = exp_t(t, n);
                const Rational deg(static_cast<long>(d));
                if (!expo.expect(agree_through(power(e, t, n), dilate(e, deg), n),
                                 [&] { return "exp functional equation t=" + show(t); }))
                    return;
                const auto l = log_t(t, n);
                if (!expo.expect(agree_through(compose(e, l), one_plus_x, n),
                                 [&] { return "exp o log t=" + show(t); }))
                    return;
                if (!expo.expect(agree_through(compose(e, scale(l, Rational(1) / deg)), root(t, n), n),
                                 [&] { return "exp(log/n) is the root, t=" + show(t); }))
                    return;
            }
    }();
    out.push_back(expo.result());
    return out;
}

// --- catalan -----------------------------------------------------------------

std::vector<CheckResult> suite_catalan(std::size_t n) {
    std::vector<CheckResult> out;

    Check counts("catalan", "profile_counts");
    [&] {
        for (std::size_t d = 1; d <= n; ++d) {
            std::uint64_t total = 0;
            for (const auto& nu : profiles_of_degree(d)) {
                const auto c = catalan(nu);
                total += c;
                if (!counts.expect(c == enumerate_profile(nu, std::max(n, default_enumeration_cap)).size(),
                                   [&] { return "degree " + std::to_string(d) + " profile count"; }))
                    return;
            }
            if (!counts.expect(total == enumerate_trees(d, std::max(n, default_enumeration_cap)).size(),
                               [&] { return "degree " + std::to_string(d) + " total"; }))
                return;
        }
    }();
    out.push_back(counts.result());

    Check aggregate("catalan", "aggregate_is_classical_binomial");
    [&] {
        for (std::size_t d = 2; d <= 4; ++d)
            for (std::size_t k = 1; k <= n; ++k) {
                const Rational q = Rational(1, static_cast<unsigned long>(d));
                if (!aggregate.expect(catalan_aggregate(d, k) == classical_binom(q, k), [&] {
                        return "d=" + std::to_string(d) + " n=" + std::to_string(k);
                    }))
                    return;
            }
    }();
    out.push_back(aggregate.result());

    Check image("catalan", "classical_image_of_root");
    [&] {
        for (std::size_t d = 2; d <= 4; ++d) {
            const auto img = to_classical(root(PlanarTree::corona(d), n), n);
            const Rational q = Rational(1, static_cast<unsigned long>(d));
            for (std::size_t k = 0; k <= n; ++k)
                if (!image.expect(img.coeffs[k] == classical_binom(q, k), [&] {
                        return "d=" + std::to_string(d) + " n=" + std::to_string(k);
                    }))
                    return;
        }
    }();
    out.push_back(image.result());
    return out;
}

using SuiteFn = std::vector<CheckResult> (*)(std::size_t);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"binom1", suite_binom1}, {"binom2", suite_binom2}, {"powers", suite_powers},
        {"delta", suite_delta},   {"derive", suite_derive}, {"roots", suite_roots},
        {"catalan", suite_catalan},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

bool is_suite(std::string_view name) {
    if (name == "all") return true;
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> run_suite(std::string_view suite, std::size_t max_degree) {
    std::vector<CheckResult> out;
    bool found = false;
    for (const auto& [name, fn] : registry()) {
        if (suite != "all" && suite != name) continue;
        found = true;
        auto part = fn(max_degree);
        out.insert(out.end(), part.begin(), part.end());
    }
    if (!found) throw std::invalid_argument("unknown verification suite: " + std::string(suite));
    return out;
}

} // namespace planar::verify

#include "planar/binomial.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "planar/errors.hpp"

namespace planar {

namespace {

void check_cap(const PlanarTree& t, std::size_t cap) {
    if (t.degree() > cap || t.degree() > 63)
        throw ResourceError("oracle over " + std::to_string(t.degree()) +
                            " leaves exceeds cap " + std::to_string(cap));
}

std::uint64_t full_mask(std::size_t m) { return LeafSet::all(m).mask(); }

// Calls fn(mask) for every k-element subset of the bits set in pool.
template <typename Fn>
void for_each_subset_of_size(std::uint64_t pool, std::size_t k, std::uint64_t chosen, Fn&& fn) {
    if (k == 0) {
        fn(chosen);
        return;
    }
    if (static_cast<std::size_t>(std::popcount(pool)) < k) return;
    const std::uint64_t low = pool & (~pool + 1);
    for_each_subset_of_size(pool & ~low, k - 1, chosen | low, fn);
    for_each_subset_of_size(pool & ~low, k, chosen, fn);
}

// Every (alpha, beta) over m components with alpha | beta = all, |alpha| in
// alpha_sizes, |beta| in beta_sizes.
template <typename Fn>
void for_each_cover(std::size_t m, const std::vector<std::size_t>& alpha_sizes,
                    const std::vector<std::size_t>& beta_sizes, Fn&& fn) {
    const auto all = full_mask(m);
    for (auto a : alpha_sizes) {
        if (a == 0 || a > m) continue;
        for_each_subset_of_size(all, a, 0, [&](std::uint64_t alpha) {
            const auto forced = all & ~alpha;
            const auto forced_size = static_cast<std::size_t>(std::popcount(forced));
            for (auto b : beta_sizes) {
                if (b < forced_size || b - forced_size > a || b == 0) continue;
                for_each_subset_of_size(alpha, b - forced_size, 0, [&](std::uint64_t extra) {
                    fn(alpha, forced | extra);
                });
            }
        });
    }
}

GammaClass classify(std::uint64_t alpha, std::uint64_t beta) {
    if (std::popcount(alpha) == 1) return GammaClass::prime;
    if (std::popcount(beta) == 1) return GammaClass::double_prime;
    return GammaClass::star;
}

std::vector<std::size_t> cover_sizes(const PlanarTree& side) {
    if (side.is_node()) return {1, side.arity()};
    return {1};
}

PlanarTree product_without(std::span<const PlanarTree> comps, std::size_t skip) {
    std::vector<PlanarTree> rest;
    rest.reserve(comps.size());
    for (std::size_t j = 0; j < comps.size(); ++j)
        if (j != skip) rest.push_back(comps[j]);
    return unit_product(rest);
}

} // namespace

// --- oracles ---------------------------------------------------------------

std::map<PlanarTree, Count> contraction_histogram(const PlanarTree& t, std::size_t cap) {
    check_cap(t, cap);
    std::map<PlanarTree, Count> out;
    if (t.is_empty()) {
        out[t] = 1;
        return out;
    }
    const std::uint64_t n = std::uint64_t{1} << t.degree();
    for (std::uint64_t mask = 0; mask < n; ++mask) ++out[contract(t, LeafSet(mask))];
    return out;
}

std::map<std::pair<PlanarTree, PlanarTree>, Count>
contraction_pair_histogram(const PlanarTree& t, std::size_t cap) {
    check_cap(t, cap);
    std::map<std::pair<PlanarTree, PlanarTree>, Count> out;
    if (t.is_empty()) {
        out[{t, t}] = 1;
        return out;
    }
    const auto all = LeafSet::all(t.degree());
    const std::uint64_t n = std::uint64_t{1} << t.degree();
    for (std::uint64_t mask = 0; mask < n; ++mask) {
        const LeafSet in(mask);
        ++out[{contract(t, in), contract(t, LeafSet(all.mask() & ~mask))}];
    }
    return out;
}

Count binom1_oracle(const PlanarTree& t, const PlanarTree& s, std::size_t cap) {
    check_cap(t, cap);
    if (t.is_empty()) return s.is_empty() ? 1 : 0;
    if (s.degree() > t.degree()) return 0;
    Count hits = 0;
    const std::uint64_t n = std::uint64_t{1} << t.degree();
    for (std::uint64_t mask = 0; mask < n; ++mask)
        if (static_cast<std::size_t>(std::popcount(mask)) == s.degree() &&
            contract(t, LeafSet(mask)) == s)
            ++hits;
    return hits;
}

Count binom2_oracle(const PlanarTree& t, const PlanarTree& s, const PlanarTree& v,
                    std::size_t cap) {
    check_cap(t, cap);
    if (t.is_empty()) return s.is_empty() && v.is_empty() ? 1 : 0;
    if (s.degree() + v.degree() != t.degree()) return 0;
    const auto all = LeafSet::all(t.degree()).mask();
    Count hits = 0;
    for (std::uint64_t mask = 0; mask <= all; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != s.degree()) continue;
        if (contract(t, LeafSet(mask)) == s && contract(t, LeafSet(all & ~mask)) == v) ++hits;
    }
    return hits;
}

// --- Gamma sets --------------------------------------------------------------

GammaSets gamma_sets(std::size_t m, std::size_t r, std::size_t s) {
    if (m < 2 || r < 2 || s < 2) throw std::invalid_argument("gamma_sets needs m, r, s >= 2");
    if (m > LeafSet::max_leaves) throw ResourceError("gamma_sets supports m <= 64");
    std::set<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for_each_cover(m, {1, r}, {1, s}, [&](std::uint64_t a, std::uint64_t b) { pairs.insert({a, b}); });
    GammaSets out;
    for (const auto& [a, b] : pairs) {
        const GammaPair g{a, b, classify(a, b)};
        out.all.push_back(g);
        switch (g.cls) {
        case GammaClass::prime: out.prime.push_back(g); break;
        case GammaClass::double_prime: out.double_prime.push_back(g); break;
        case GammaClass::star: out.star.push_back(g); break;
        }
    }
    return out;
}

GammaPair gamma_signature(const PlanarTree& t, LeafSet leaves) {
    if (!t.is_node()) throw std::invalid_argument("gamma signature needs a node tree");
    const auto rest = leaves.complement(t.degree()).mask();
    GammaPair g;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < t.arity(); ++i) {
        const auto d = t.children()[i].degree();
        const auto window = (d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1) << offset;
        if ((leaves.mask() & window) != 0) g.alpha |= std::uint64_t{1} << i;
        if ((rest & window) != 0) g.beta |= std::uint64_t{1} << i;
        offset += d;
    }
    g.cls = classify(g.alpha, g.beta);
    return g;
}

// --- recursions --------------------------------------------------------------

std::size_t BinomialTable::KeyHash::operator()(const PairKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.a * 0x9e3779b97f4a7c15ULL ^ k.b);
}

std::size_t BinomialTable::KeyHash::operator()(const TripleKey& k) const noexcept {
    return std::hash<std::uint64_t>{}((k.a * 0x9e3779b97f4a7c15ULL ^ k.b) * 0xc2b2ae3d27d4eb4fULL ^
                                      k.c);
}

void BinomialTable::clear() {
    first_memo_.clear();
    second_memo_.clear();
}

Count BinomialTable::first(const PlanarTree& t, const PlanarTree& s) {
    if (s.degree() > t.degree()) return 0;
    if (s.degree() == t.degree()) return s == t ? 1 : 0;
    if (s.is_empty()) return 1;
    if (s.is_leaf()) return t.degree();
    // Here t and s are both node trees.
    const PairKey key{t.id(), s.id()};
    if (auto it = first_memo_.find(key); it != first_memo_.end()) return it->second;
    const auto value = first_node(t, s);
    first_memo_.emplace(key, value);
    return value;
}

Count BinomialTable::first_node(const PlanarTree& t, const PlanarTree& s) {
    const auto tc = t.children();
    const auto sc = s.children();
    const auto r = sc.size();
    // ways[j]: order-preserving matches of S_1..S_j into the components seen so far.
    std::vector<Count> ways(r + 1, 0);
    ways[0] = 1;
    Count inside = 0;
    for (const auto& ti : tc) {
        for (std::size_t j = r; j >= 1; --j)
            if (ways[j - 1] != 0) ways[j] += ways[j - 1] * first(ti, sc[j - 1]);
        inside += first(ti, s);
    }
    return ways[r] + inside;
}

Count BinomialTable::second(const PlanarTree& t, const PlanarTree& s, const PlanarTree& v) {
    if (s.degree() + v.degree() != t.degree()) return 0;
    if (t.is_empty()) return 1;
    if (s.is_empty()) return v == t ? 1 : 0;
    if (v.is_empty()) return s == t ? 1 : 0;
    // Both sides non-empty and degrees add up, so t has at least two leaves.
    const TripleKey key{t.id(), s.id(), v.id()};
    if (auto it = second_memo_.find(key); it != second_memo_.end()) return it->second;
    const auto value = second_node(t, s, v);
    second_memo_.emplace(key, value);
    return value;
}

Count BinomialTable::second_node(const PlanarTree& t, const PlanarTree& s, const PlanarTree& v) {
    Count total = 0;
    for_each_cover(t.arity(), cover_sizes(s), cover_sizes(v),
                   [&](std::uint64_t alpha, std::uint64_t beta) {
                       total += second_restricted(t, s, v, GammaPair{alpha, beta, classify(alpha, beta)});
                   });
    return total;
}

Count BinomialTable::second_restricted(const PlanarTree& t, const PlanarTree& s,
                                       const PlanarTree& v, const GammaPair& gamma) {
    if (!t.is_node()) throw std::invalid_argument("restricted count needs a node tree");
    const auto m = t.arity();
    const auto all = full_mask(m);
    const auto alpha = gamma.alpha;
    const auto beta = gamma.beta;
    if ((alpha | beta) != all || (alpha & ~all) != 0 || (beta & ~all) != 0) return 0;
    if (alpha == 0) return s.is_empty() && v == t ? 1 : 0;
    if (beta == 0) return v.is_empty() && s == t ? 1 : 0;
    if (s.is_empty() || v.is_empty()) return 0;

    const auto comps = t.children();
    const auto a = static_cast<std::size_t>(std::popcount(alpha));
    const auto b = static_cast<std::size_t>(std::popcount(beta));

    if (a == 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(alpha));
        if (beta == (all & ~alpha)) return s == comps[i] && v == product_without(comps, i) ? 1 : 0;
        if (beta != all || !v.is_node() || v.arity() != m) return 0;
        const auto vc = v.children();
        for (std::size_t j = 0; j < m; ++j)
            if (j != i && vc[j] != comps[j]) return 0;
        return second(comps[i], s, vc[i]);
    }
    if (b == 1) {
        const auto k = static_cast<std::size_t>(std::countr_zero(beta));
        if (alpha == (all & ~beta)) return v == comps[k] && s == product_without(comps, k) ? 1 : 0;
        if (alpha != all || !s.is_node() || s.arity() != m) return 0;
        const auto sc = s.children();
        for (std::size_t j = 0; j < m; ++j)
            if (j != k && sc[j] != comps[j]) return 0;
        return second(comps[k], sc[k], v);
    }
    if (!s.is_node() || s.arity() != a || !v.is_node() || v.arity() != b) return 0;
    const auto sc = s.children();
    const auto vc = v.children();
    Count product = 1;
    std::size_t j = 0; // next component of s
    std::size_t k = 0; // next component of v
    for (std::size_t i = 0; i < m && product != 0; ++i) {
        const bool in_alpha = ((alpha >> i) & 1U) != 0;
        const bool in_beta = ((beta >> i) & 1U) != 0;
        if (in_alpha && in_beta)
            product *= second(comps[i], sc[j++], vc[k++]);
        else if (in_alpha)
            product *= comps[i] == sc[j++] ? 1 : 0;
        else
            product *= comps[i] == vc[k++] ? 1 : 0;
    }
    return product;
}

Count binom1(const PlanarTree& t, const PlanarTree& s) {
    BinomialTable table;
    return table.first(t, s);
}

Count binom2(const PlanarTree& t, const PlanarTree& s, const PlanarTree& v) {
    BinomialTable table;
    return table.second(t, s, v);
}

} // namespace planar

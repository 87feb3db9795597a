#include "planar/series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "planar/binomial.hpp"

namespace planar {

Truncation min_truncation(Truncation a, Truncation b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

namespace {

std::size_t budget_of(Truncation t) { return t.value_or(std::numeric_limits<std::size_t>::max()); }

bool exceeds(std::size_t degree, Truncation t) { return t && degree > *t; }

} // namespace

// --- PlanarSeries ------------------------------------------------------------

PlanarSeries PlanarSeries::monomial(const PlanarTree& t, const Rational& c, Truncation truncation) {
    PlanarSeries f(truncation);
    f.add_term(t, c);
    return f;
}

PlanarSeries PlanarSeries::one_plus_x() {
    PlanarSeries f;
    f.add_term(PlanarTree::empty(), 1);
    f.add_term(PlanarTree::leaf(), 1);
    return f;
}

Rational PlanarSeries::coeff(const PlanarTree& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t PlanarSeries::max_degree() const {
    return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

void PlanarSeries::add_term(const PlanarTree& t, const Rational& c) {
    if (c == 0 || exceeds(t.degree(), truncation_)) return;
    auto [it, inserted] = terms_.try_emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PlanarSeries PlanarSeries::truncated(std::size_t n) const {
    PlanarSeries out(min_truncation(truncation_, n));
    for (const auto& [t, c] : terms_)
        if (t.degree() <= n) out.terms_.emplace_hint(out.terms_.end(), t, c);
    return out;
}

PlanarSeries PlanarSeries::homogeneous_part(std::size_t k) const {
    PlanarSeries out;
    for (const auto& [t, c] : terms_)
        if (t.degree() == k) out.terms_.emplace_hint(out.terms_.end(), t, c);
    return out;
}

bool agree_through(const PlanarSeries& a, const PlanarSeries& b, std::size_t n) {
    for (const auto& [t, c] : a.terms())
        if (t.degree() <= n && b.coeff(t) != c) return false;
    for (const auto& [t, c] : b.terms())
        if (t.degree() <= n && a.coeff(t) != c) return false;
    return true;
}

PlanarSeries add(const PlanarSeries& f, const PlanarSeries& g) {
    PlanarSeries out(min_truncation(f.truncation(), g.truncation()));
    for (const auto& [t, c] : f.terms()) out.add_term(t, c);
    for (const auto& [t, c] : g.terms()) out.add_term(t, c);
    return out;
}

PlanarSeries subtract(const PlanarSeries& f, const PlanarSeries& g) { return add(f, scale(g, -1)); }

PlanarSeries scale(const PlanarSeries& f, const Rational& c) {
    PlanarSeries out(f.truncation());
    if (c == 0) return out;
    for (const auto& [t, a] : f.terms()) out.add_term(t, a * c);
    return out;
}

// --- products ------------------------------------------------------------------

namespace {

struct Term {
    PlanarTree tree;
    Rational coeff;
    std::size_t degree;
};

std::vector<Term> by_degree(const PlanarSeries& f) {
    std::vector<Term> out;
    out.reserve(f.size());
    // Map order is degree-major already.
    for (const auto& [t, c] : f.terms()) out.push_back({t, c, t.degree()});
    return out;
}

class ProductExpander {
public:
    ProductExpander(std::span<const PlanarSeries> parts, std::size_t budget) : budget_(budget) {
        for (const auto& p : parts) lists_.push_back(by_degree(p));
        suffix_min_.assign(lists_.size() + 1, 0);
        for (std::size_t i = lists_.size(); i-- > 0;)
            suffix_min_[i] = suffix_min_[i + 1] + (lists_[i].empty() ? 0 : lists_[i].front().degree);
        chosen_.resize(lists_.size());
    }

    std::unordered_map<PlanarTree, Rational, TreeHash> run() {
        for (const auto& l : lists_)
            if (l.empty()) return {};
        if (suffix_min_[0] <= budget_) expand(0, 0, Rational(1));
        return std::move(acc_);
    }

private:
    void expand(std::size_t i, std::size_t used, const Rational& c) {
        if (i == lists_.size()) {
            acc_[unit_product(chosen_)] += c;
            return;
        }
        for (const auto& term : lists_[i]) {
            if (used + term.degree + suffix_min_[i + 1] > budget_) break;
            chosen_[i] = term.tree;
            expand(i + 1, used + term.degree, c * term.coeff);
        }
    }

    std::size_t budget_;
    std::vector<std::vector<Term>> lists_;
    std::vector<std::size_t> suffix_min_;
    std::vector<PlanarTree> chosen_;
    std::unordered_map<PlanarTree, Rational, TreeHash> acc_;
};

// Powers g^U for many U sharing one memo of subtree powers.
class PowerCache {
public:
    PowerCache(const PlanarSeries& base, Truncation truncation)
        : base_(base), truncation_(truncation) {}

    const PlanarSeries& get(const PlanarTree& u) {
        if (auto it = memo_.find(u); it != memo_.end()) return it->second;
        PlanarSeries value;
        if (u.is_leaf()) {
            value = truncation_ ? base_.truncated(*truncation_) : base_;
        } else {
            std::vector<PlanarSeries> parts;
            parts.reserve(u.arity());
            for (const auto& c : u.children()) parts.push_back(get(c));
            value = mul(parts, truncation_);
        }
        return memo_.emplace(u, std::move(value)).first->second;
    }

private:
    const PlanarSeries& base_;
    Truncation truncation_;
    std::unordered_map<PlanarTree, PlanarSeries, TreeHash> memo_;
};

} // namespace

PlanarSeries mul(std::span<const PlanarSeries> parts, Truncation max_degree) {
    if (parts.size() < 2) throw std::invalid_argument("mul needs at least two factors");
    Truncation trunc = max_degree;
    for (const auto& p : parts) trunc = min_truncation(trunc, p.truncation());
    PlanarSeries out(trunc);
    for (const auto& [t, c] : ProductExpander(parts, budget_of(trunc)).run()) out.add_term(t, c);
    return out;
}

PlanarSeries mul(const PlanarSeries& f, const PlanarSeries& g) {
    const PlanarSeries parts[] = {f, g};
    return mul(parts);
}

PlanarSeries power(const PlanarSeries& f, const PlanarTree& t, Truncation max_degree) {
    if (t.is_empty()) throw std::invalid_argument("power by the empty tree");
    PowerCache cache(f, min_truncation(f.truncation(), max_degree));
    return cache.get(t);
}

PlanarTree tree_power(const PlanarTree& t, const PlanarTree& s) {
    if (t.is_empty() || s.is_empty()) throw std::invalid_argument("tree_power of the empty tree");
    const std::vector<PlanarTree> copies(s.degree(), t);
    return substitute(s, copies);
}

PlanarSeries compose(const PlanarSeries& f, const PlanarSeries& g, Truncation max_degree) {
    if (g.constant_term() != 0)
        throw std::invalid_argument("compose needs an inner series without constant term");
    const auto trunc = min_truncation(min_truncation(f.truncation(), g.truncation()), max_degree);
    PlanarSeries out(trunc);
    PowerCache cache(g, trunc);
    for (const auto& [u, c] : f.terms()) {
        if (u.is_empty()) {
            out.add_term(u, c);
            continue;
        }
        // g has order >= 1, so g^u starts in degree deg(u).
        if (exceeds(u.degree(), trunc)) break;
        for (const auto& [w, a] : cache.get(u).terms()) out.add_term(w, c * a);
    }
    return out;
}

PlanarSeries derive(const PlanarSeries& f) {
    Truncation trunc;
    if (f.truncation()) trunc = *f.truncation() == 0 ? 0 : *f.truncation() - 1;
    PlanarSeries out(trunc);
    for (const auto& [t, c] : f.terms()) {
        if (t.is_empty()) continue;
        const auto all = LeafSet::all(t.degree()).mask();
        for (std::size_t leaf = 0; leaf < t.degree(); ++leaf)
            out.add_term(contract(t, LeafSet(all & ~(std::uint64_t{1} << leaf))), c);
    }
    return out;
}

// --- tensors -----------------------------------------------------------------

Rational TensorSeries::coeff(const PlanarTree& left, const PlanarTree& right) const {
    auto it = terms_.find({left, right});
    return it == terms_.end() ? Rational(0) : it->second;
}

void TensorSeries::add_term(const PlanarTree& left, const PlanarTree& right, const Rational& c) {
    if (c == 0 || exceeds(left.degree() + right.degree(), truncation_)) return;
    auto [it, inserted] = terms_.try_emplace({left, right}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorSeries TensorSeries::swapped() const {
    TensorSeries out(truncation_);
    for (const auto& [k, c] : terms_) out.add_term(k.second, k.first, c);
    return out;
}

namespace {

void expand_tensor(std::span<const TensorSeries> parts, std::size_t i,
                   std::vector<PlanarTree>& lefts, std::vector<PlanarTree>& rights,
                   const Rational& c, TensorSeries& out) {
    if (i == parts.size()) {
        out.add_term(unit_product(lefts), unit_product(rights), c);
        return;
    }
    for (const auto& [k, a] : parts[i].terms()) {
        lefts[i] = k.first;
        rights[i] = k.second;
        expand_tensor(parts, i + 1, lefts, rights, c * a, out);
    }
}

} // namespace

TensorSeries mul(std::span<const TensorSeries> parts) {
    if (parts.size() < 2) throw std::invalid_argument("mul needs at least two factors");
    Truncation trunc;
    for (const auto& p : parts) trunc = min_truncation(trunc, p.truncation());
    TensorSeries out(trunc);
    std::vector<PlanarTree> lefts(parts.size()), rights(parts.size());
    expand_tensor(parts, 0, lefts, rights, Rational(1), out);
    return out;
}

TensorSeries power(const TensorSeries& f, const PlanarTree& t) {
    if (t.is_empty()) throw std::invalid_argument("power by the empty tree");
    if (t.is_leaf()) return f;
    std::vector<TensorSeries> parts;
    parts.reserve(t.arity());
    for (const auto& c : t.children()) parts.push_back(power(f, c));
    return mul(parts);
}

TensorSeries coaddition_structural(const PlanarTree& t) {
    if (t.is_empty()) {
        TensorSeries unit;
        unit.add_term(t, t, 1);
        return unit;
    }
    TensorSeries dx;
    dx.add_term(PlanarTree::leaf(), PlanarTree::empty(), 1);
    dx.add_term(PlanarTree::empty(), PlanarTree::leaf(), 1);
    return power(dx, t);
}

TensorSeries coaddition(const PlanarTree& t) {
    if (t.degree() > default_oracle_cap) return coaddition_structural(t);
    TensorSeries out;
    for (const auto& [k, n] : contraction_pair_histogram(t)) out.add_term(k.first, k.second, n);
    return out;
}

TensorSeries delta(const PlanarSeries& f) {
    TensorSeries out(f.truncation());
    for (const auto& [t, c] : f.terms()) {
        const auto split = coaddition(t);
        for (const auto& [k, n] : split.terms()) out.add_term(k.first, k.second, c * n);
    }
    return out;
}

// --- classical image ---------------------------------------------------------

ClassicalSeries to_classical(const PlanarSeries& f, std::size_t n) {
    if (f.truncation() && *f.truncation() < n)
        throw std::invalid_argument("series is not known through the requested degree");
    ClassicalSeries out{std::vector<Rational>(n + 1, Rational(0))};
    for (const auto& [t, c] : f.terms())
        if (t.degree() <= n) out.coeffs[t.degree()] += c;
    return out;
}

ClassicalSeries classical_product(const ClassicalSeries& a, const ClassicalSeries& b) {
    const auto n = std::min(a.coeffs.size(), b.coeffs.size());
    ClassicalSeries out{std::vector<Rational>(n, Rational(0))};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    return out;
}

} // namespace planar

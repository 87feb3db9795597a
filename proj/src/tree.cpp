#include "planar/tree.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cctype>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "planar/errors.hpp"

namespace planar {

namespace {

const detail::TreeNode* empty_node() noexcept {
    static const detail::TreeNode node{PlanarTree::Kind::empty, 0, 0, {}};
    return &node;
}

const detail::TreeNode* leaf_node() noexcept {
    static const detail::TreeNode node{PlanarTree::Kind::leaf, 1, 1, {}};
    return &node;
}

std::uint64_t mix(std::uint64_t h) noexcept {
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    h *= 0xc4ceb9fe1a85ec53ULL;
    h ^= h >> 33;
    return h;
}

std::uint64_t hash_children(std::span<const PlanarTree> children) noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ children.size();
    for (const auto& c : children) h = mix(h ^ (c.id() + 0x9e3779b97f4a7c15ULL + (h << 6)));
    return h;
}

class Interner {
public:
    const detail::TreeNode* intern(std::span<const PlanarTree> children) {
        const auto h = hash_children(children);
        std::lock_guard lock(mu_);
        auto [first, last] = table_.equal_range(h);
        for (auto it = first; it != last; ++it) {
            const auto& existing = it->second->children;
            if (std::equal(existing.begin(), existing.end(), children.begin(), children.end()))
                return it->second.get();
        }
        std::size_t degree = 0;
        for (const auto& c : children) degree += c.degree();
        auto node = std::make_unique<detail::TreeNode>(detail::TreeNode{
            PlanarTree::Kind::node, degree, next_id_++,
            std::vector<PlanarTree>(children.begin(), children.end())});
        const auto* raw = node.get();
        table_.emplace(h, std::move(node));
        return raw;
    }

private:
    std::mutex mu_;
    std::unordered_multimap<std::uint64_t, std::unique_ptr<detail::TreeNode>> table_;
    std::uint64_t next_id_ = 2;
};

Interner& interner() {
    static Interner instance;
    return instance;
}

} // namespace

PlanarTree::PlanarTree() noexcept : node_(empty_node()) {}

PlanarTree PlanarTree::leaf() noexcept { return PlanarTree(leaf_node()); }

PlanarTree PlanarTree::corona(std::size_t r) {
    std::vector<PlanarTree> leaves(r, leaf());
    return graft(leaves);
}

std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    // Equal degree and distinct: the empty tree and the leaf are unique in their degree.
    if (auto c = a.arity() <=> b.arity(); c != 0) return c;
    const auto ac = a.children();
    const auto bc = b.children();
    for (std::size_t i = 0; i < ac.size(); ++i)
        if (auto c = ac[i] <=> bc[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

// --- LeafSet -------------------------------------------------------------

LeafSet::LeafSet(std::initializer_list<std::size_t> indices) {
    for (auto i : indices) insert(i);
}

LeafSet LeafSet::all(std::size_t degree) {
    if (degree > max_leaves) throw ResourceError("leaf sets hold at most 64 leaves");
    return LeafSet(degree == max_leaves ? ~std::uint64_t{0} : (std::uint64_t{1} << degree) - 1);
}

void LeafSet::insert(std::size_t index) {
    if (index >= max_leaves) throw std::out_of_range("leaf index beyond 64");
    mask_ |= std::uint64_t{1} << index;
}

std::size_t LeafSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

LeafSet LeafSet::complement(std::size_t degree) const { return LeafSet(all(degree).mask() & ~mask_); }

// --- construction ----------------------------------------------------------

PlanarTree graft(std::span<const PlanarTree> children) {
    if (children.size() < 2) throw std::invalid_argument("graft needs at least two children");
    for (const auto& c : children)
        if (c.is_empty()) throw std::invalid_argument("graft child is the empty tree");
    return PlanarTree(interner().intern(children));
}

PlanarTree graft(std::initializer_list<PlanarTree> children) {
    return graft(std::span<const PlanarTree>(children.begin(), children.size()));
}

PlanarTree unit_product(std::span<const PlanarTree> factors) {
    std::vector<PlanarTree> kept;
    kept.reserve(factors.size());
    for (const auto& f : factors)
        if (!f.is_empty()) kept.push_back(f);
    if (kept.empty()) return PlanarTree::empty();
    if (kept.size() == 1) return kept.front();
    return graft(kept);
}

// --- text ------------------------------------------------------------------

namespace {

class TreeParser {
public:
    explicit TreeParser(std::string_view text) : text_(text) {}

    PlanarTree parse() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty tree text", pos_);
        PlanarTree out;
        if (text_[pos_] == '1') {
            ++pos_;
        } else {
            out = node();
        }
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("trailing characters after tree", pos_);
        return out;
    }

private:
    PlanarTree node() {
        if (pos_ == text_.size()) throw ParseError("unexpected end of input", pos_);
        const char c = text_[pos_];
        if (c == 'x') {
            ++pos_;
            return PlanarTree::leaf();
        }
        if (c == '1') throw ParseError("the unit 1 may only appear as a whole tree", pos_);
        if (c != '(') throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        const auto open = pos_++;
        std::vector<PlanarTree> children;
        for (;;) {
            skip_ws();
            if (pos_ == text_.size()) throw ParseError("unclosed parenthesis", open);
            if (text_[pos_] == ')') {
                ++pos_;
                break;
            }
            children.push_back(node());
        }
        if (children.size() < 2)
            throw ParseError("inner vertex needs at least two children", open);
        return graft(children);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

void render_into(const PlanarTree& t, std::string& out) {
    switch (t.kind()) {
    case PlanarTree::Kind::empty: out += '1'; return;
    case PlanarTree::Kind::leaf: out += 'x'; return;
    case PlanarTree::Kind::node: break;
    }
    out += '(';
    bool first = true;
    for (const auto& c : t.children()) {
        if (!first) out += ' ';
        first = false;
        render_into(c, out);
    }
    out += ')';
}

} // namespace

PlanarTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

std::string render_tree(const PlanarTree& t) {
    std::string out;
    render_into(t, out);
    return out;
}

// --- contraction and substitution -------------------------------------------

namespace {

PlanarTree contract_from(const PlanarTree& t, std::uint64_t mask, std::size_t& offset) {
    if (t.is_leaf()) return ((mask >> offset++) & 1U) != 0 ? t : PlanarTree::empty();
    std::vector<PlanarTree> parts;
    parts.reserve(t.arity());
    for (const auto& c : t.children()) parts.push_back(contract_from(c, mask, offset));
    return unit_product(parts);
}

PlanarTree substitute_from(const PlanarTree& t, std::span<const PlanarTree> assignment,
                           std::size_t& offset) {
    if (t.is_leaf()) return assignment[offset++];
    std::vector<PlanarTree> parts;
    parts.reserve(t.arity());
    for (const auto& c : t.children()) parts.push_back(substitute_from(c, assignment, offset));
    return unit_product(parts);
}

} // namespace

PlanarTree contract(const PlanarTree& t, LeafSet leaves) {
    if (t.is_empty()) throw std::invalid_argument("cannot contract the empty tree");
    if (t.degree() > LeafSet::max_leaves)
        throw ResourceError("contraction supports trees with at most 64 leaves");
    if ((leaves.mask() & ~LeafSet::all(t.degree()).mask()) != 0)
        throw std::out_of_range("leaf index out of range for contraction");
    std::size_t offset = 0;
    return contract_from(t, leaves.mask(), offset);
}

PlanarTree substitute(const PlanarTree& t, std::span<const PlanarTree> assignment) {
    if (t.is_empty()) throw std::invalid_argument("cannot substitute into the empty tree");
    if (assignment.size() != t.degree())
        throw std::invalid_argument("substitution needs exactly one tree per leaf");
    std::size_t offset = 0;
    return substitute_from(t, assignment, offset);
}

// --- enumeration -----------------------------------------------------------

namespace {

// Appends, in lexicographic order, every child sequence of `slots` trees with total
// degree `remaining`, each child drawn from by_degree in canonical order.
void child_sequences(const std::vector<std::vector<PlanarTree>>& by_degree, std::size_t remaining,
                     std::size_t slots, std::vector<PlanarTree>& prefix,
                     std::vector<PlanarTree>& out) {
    if (slots == 0) {
        if (remaining == 0) out.push_back(graft(prefix));
        return;
    }
    for (std::size_t d = 1; d + (slots - 1) <= remaining; ++d) {
        for (const auto& t : by_degree[d]) {
            prefix.push_back(t);
            child_sequences(by_degree, remaining - d, slots - 1, prefix, out);
            prefix.pop_back();
        }
    }
}

} // namespace

std::vector<PlanarTree> enumerate_trees(std::size_t n, std::size_t cap) {
    if (n > cap)
        throw ResourceError("enumeration degree " + std::to_string(n) + " exceeds cap " +
                            std::to_string(cap));
    if (n == 0) return {PlanarTree::empty()};
    std::vector<std::vector<PlanarTree>> by_degree(n + 1);
    by_degree[1] = {PlanarTree::leaf()};
    for (std::size_t d = 2; d <= n; ++d) {
        std::vector<PlanarTree> prefix;
        for (std::size_t m = 2; m <= d; ++m) child_sequences(by_degree, d, m, prefix, by_degree[d]);
    }
    return std::move(by_degree[n]);
}

ArityProfile ArityProfile::from_counts(const std::map<std::size_t, std::size_t>& counts) {
    ArityProfile p;
    p.degree = 1;
    p.total_vertices = 0;
    for (const auto& [k, c] : counts) {
        if (k < 2) throw std::invalid_argument("arity profile keys must be >= 2");
        if (c == 0) continue;
        p.nu[k] = c;
        p.degree += (k - 1) * c;
        p.total_vertices += c;
    }
    p.total_vertices += p.degree;
    return p;
}

std::size_t ArityProfile::count(std::size_t arity) const {
    auto it = nu.find(arity);
    return it == nu.end() ? 0 : it->second;
}

namespace {

void accumulate_profile(const PlanarTree& t, ArityProfile& p) {
    if (t.is_leaf()) {
        ++p.degree;
        ++p.total_vertices;
        return;
    }
    ++p.nu[t.arity()];
    ++p.total_vertices;
    for (const auto& c : t.children()) accumulate_profile(c, p);
}

} // namespace

ArityProfile arity_profile(const PlanarTree& t) {
    ArityProfile p;
    if (!t.is_empty()) accumulate_profile(t, p);
    return p;
}

std::vector<PlanarTree> enumerate_profile(const ArityProfile& nu, std::size_t cap) {
    auto all = enumerate_trees(nu.degree, cap);
    std::vector<PlanarTree> out;
    for (const auto& t : all)
        if (arity_profile(t).nu == nu.nu) out.push_back(t);
    return out;
}

std::uint64_t catalan(const ArityProfile& nu) {
    if (nu.degree == 0) return 1;
    // Plane trees with prescribed out-degree counts: (1/N) * N! / (nu_0! prod nu_k!).
    mpz_class numerator;
    mpz_fac_ui(numerator.get_mpz_t(), nu.total_vertices - 1);
    mpz_class denominator;
    mpz_fac_ui(denominator.get_mpz_t(), nu.degree);
    for (const auto& [k, c] : nu.nu) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), c);
        denominator *= f;
    }
    mpz_class q = numerator / denominator;
    if (!q.fits_ulong_p()) throw ResourceError("Catalan number of profile overflows 64 bits");
    return q.get_ui();
}

namespace {

void partitions(std::size_t remaining, std::size_t max_part, std::map<std::size_t, std::size_t>& cur,
                std::vector<ArityProfile>& out) {
    if (remaining == 0) {
        out.push_back(ArityProfile::from_counts(cur));
        return;
    }
    for (std::size_t part = std::min(remaining, max_part); part >= 1; --part) {
        ++cur[part + 1];
        partitions(remaining - part, part, cur, out);
        if (--cur[part + 1] == 0) cur.erase(part + 1);
    }
}

} // namespace

std::vector<ArityProfile> profiles_of_degree(std::size_t n) {
    if (n == 0) throw std::invalid_argument("profiles have degree >= 1");
    std::vector<ArityProfile> out;
    std::map<std::size_t, std::size_t> cur;
    partitions(n - 1, n - 1, cur, out);
    std::sort(out.begin(), out.end(),
              [](const ArityProfile& a, const ArityProfile& b) { return a.nu < b.nu; });
    return out;
}

} // namespace planar

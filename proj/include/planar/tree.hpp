#pragma once

/**
 * Finite planar reduced rooted trees.
 *
 * A PlanarTree is one of
 *   - the empty tree "1" (degree 0, the unit),
 *   - the single vertex "x" (degree 1),
 *   - a node grafting m >= 2 non-empty subtrees in planar order.
 *
 * Trees are hash-consed: every structurally distinct tree is stored exactly
 * once in a process-wide table and a PlanarTree is a handle to that entry.
 * Equality is therefore a pointer comparison and handles are trivially
 * copyable, immutable and safe to share between threads. Interned nodes live
 * for the lifetime of the process.
 *
 * The canonical order (operator<=>) is: degree ascending, then root arity
 * ascending, then children lexicographically.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace planar {

namespace detail {
struct TreeNode;
}

class PlanarTree {
public:
    enum class Kind : std::uint8_t { empty, leaf, node };

    // The empty tree.
    PlanarTree() noexcept;

    static PlanarTree empty() noexcept { return PlanarTree(); }
    static PlanarTree leaf() noexcept;
    // One inner vertex with r leaves; r >= 2.
    static PlanarTree corona(std::size_t r);

    Kind kind() const noexcept;
    bool is_empty() const noexcept { return kind() == Kind::empty; }
    bool is_leaf() const noexcept { return kind() == Kind::leaf; }
    bool is_node() const noexcept { return kind() == Kind::node; }

    // Number of leaves.
    std::size_t degree() const noexcept;
    // Root arity; 0 for the empty tree and the leaf.
    std::size_t arity() const noexcept;
    std::span<const PlanarTree> children() const noexcept;

    // Interning identifier. Stable within a process, unrelated to the canonical order.
    std::uint64_t id() const noexcept;

    friend bool operator==(const PlanarTree& a, const PlanarTree& b) noexcept {
        return a.node_ == b.node_;
    }
    friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) noexcept;

private:
    explicit PlanarTree(const detail::TreeNode* node) noexcept : node_(node) {}

    const detail::TreeNode* node_;

    friend PlanarTree graft(std::span<const PlanarTree> children);
};

namespace detail {
struct TreeNode {
    PlanarTree::Kind kind;
    std::size_t degree;
    std::uint64_t id;
    std::vector<PlanarTree> children;
};
} // namespace detail

inline PlanarTree::Kind PlanarTree::kind() const noexcept { return node_->kind; }
inline std::size_t PlanarTree::degree() const noexcept { return node_->degree; }
inline std::size_t PlanarTree::arity() const noexcept { return node_->children.size(); }
inline std::span<const PlanarTree> PlanarTree::children() const noexcept {
    return node_->children;
}
inline std::uint64_t PlanarTree::id() const noexcept { return node_->id; }

struct TreeHash {
    std::size_t operator()(const PlanarTree& t) const noexcept {
        return std::hash<std::uint64_t>{}(t.id());
    }
};

// Leaf subset of a tree, leaves numbered 0.. left to right. At most 64 leaves.
class LeafSet {
public:
    static constexpr std::size_t max_leaves = 64;

    LeafSet() = default;
    explicit LeafSet(std::uint64_t mask) noexcept : mask_(mask) {}
    LeafSet(std::initializer_list<std::size_t> indices);

    static LeafSet all(std::size_t degree);

    bool contains(std::size_t index) const noexcept {
        return index < max_leaves && ((mask_ >> index) & 1U) != 0;
    }
    void insert(std::size_t index);
    std::size_t size() const noexcept;
    bool empty() const noexcept { return mask_ == 0; }
    std::uint64_t mask() const noexcept { return mask_; }
    // Complement relative to the leaves of a tree of the given degree.
    LeafSet complement(std::size_t degree) const;

    friend bool operator==(const LeafSet&, const LeafSet&) = default;

private:
    std::uint64_t mask_ = 0;
};

// Counts of inner vertices by arity, plus the degree and total vertex count.
struct ArityProfile {
    std::map<std::size_t, std::size_t> nu; // arity k >= 2 -> count, zero counts omitted
    std::size_t degree = 0;                // nu_0
    std::size_t total_vertices = 0;        // nu_0 + sum_k nu_k

    // Builds a profile from arity counts alone: degree = 1 + sum (k-1) nu_k.
    static ArityProfile from_counts(const std::map<std::size_t, std::size_t>& counts);

    std::size_t count(std::size_t arity) const;
    std::size_t max_arity() const noexcept { return nu.empty() ? 0 : nu.rbegin()->first; }

    friend bool operator==(const ArityProfile&, const ArityProfile&) = default;
};

inline constexpr std::size_t default_enumeration_cap = 12;

PlanarTree parse_tree(std::string_view text);
std::string render_tree(const PlanarTree& t);

// m-ary grafting, m >= 2, no empty children.
PlanarTree graft(std::span<const PlanarTree> children);
PlanarTree graft(std::initializer_list<PlanarTree> children);

// The m-ary product on monomials with unit contraction: empty arguments are
// dropped, a single survivor is returned as is, otherwise the survivors are grafted.
PlanarTree unit_product(std::span<const PlanarTree> factors);

// Contraction of t onto the leaves in `leaves` (path union, unary vertices suppressed).
PlanarTree contract(const PlanarTree& t, LeafSet leaves);

// Replaces leaf i of t by assignment[i] and contracts the units away.
PlanarTree substitute(const PlanarTree& t, std::span<const PlanarTree> assignment);

// All trees of degree n in canonical order.
std::vector<PlanarTree> enumerate_trees(std::size_t n,
                                        std::size_t cap = default_enumeration_cap);

ArityProfile arity_profile(const PlanarTree& t);

// All trees with the given inner-vertex arity counts, canonical order.
std::vector<PlanarTree> enumerate_profile(const ArityProfile& nu,
                                          std::size_t cap = default_enumeration_cap);

// Number of trees with the given profile (closed form, no enumeration).
std::uint64_t catalan(const ArityProfile& nu);

// Every profile of the given degree n >= 1, ordered by their arity maps.
std::vector<ArityProfile> profiles_of_degree(std::size_t n);

} // namespace planar

template <>
struct std::hash<planar::PlanarTree> {
    std::size_t operator()(const planar::PlanarTree& t) const noexcept {
        return planar::TreeHash{}(t);
    }
};

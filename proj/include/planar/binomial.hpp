#pragma once

// Planar binomial coefficients.
//
//   first kind   (T over S)    = #{ I subset of L(T) : T|I = S }
//   second kind  (T over S, V) = #{ I : T|I = S and T|I' = V },  I' = L(T) - I
//
// Each comes with a brute-force oracle over all leaf subsets and a memoized
// recursion on root decompositions. BinomialTable owns the memo tables; it is
// cheap to create and is meant to live for one computation on one thread.

#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "planar/tree.hpp"

namespace planar {

using Count = std::uint64_t;

inline constexpr std::size_t default_oracle_cap = 20;

// Histogram of T|I over all subsets I.
std::map<PlanarTree, Count> contraction_histogram(const PlanarTree& t,
                                                  std::size_t cap = default_oracle_cap);
// Histogram of (T|I, T|I') over all subsets I.
std::map<std::pair<PlanarTree, PlanarTree>, Count>
contraction_pair_histogram(const PlanarTree& t, std::size_t cap = default_oracle_cap);

Count binom1_oracle(const PlanarTree& t, const PlanarTree& s,
                    std::size_t cap = default_oracle_cap);
Count binom2_oracle(const PlanarTree& t, const PlanarTree& s, const PlanarTree& v,
                    std::size_t cap = default_oracle_cap);

// Pairs (alpha, beta) of subsets of the m root components, stored as bit masks
// over 0-based component indices.
enum class GammaClass : std::uint8_t {
    prime,        // |alpha| = 1
    double_prime, // |beta| = 1 and |alpha| != 1
    star,         // all remaining pairs: |alpha| = r, |beta| = s
};

struct GammaPair {
    std::uint64_t alpha = 0;
    std::uint64_t beta = 0;
    GammaClass cls = GammaClass::star;

    friend bool operator==(const GammaPair&, const GammaPair&) = default;
};

struct GammaSets {
    std::vector<GammaPair> all; // Gamma(m, r, s)
    std::vector<GammaPair> prime;
    std::vector<GammaPair> double_prime;
    std::vector<GammaPair> star;
};

// Gamma(m, r, s) and its partition. m, r, s >= 2, m <= 64.
GammaSets gamma_sets(std::size_t m, std::size_t r, std::size_t s);

// The (alpha, beta) signature of a leaf subset of a node tree t.
GammaPair gamma_signature(const PlanarTree& t, LeafSet leaves);

class BinomialTable {
public:
    Count first(const PlanarTree& t, const PlanarTree& s);
    Count second(const PlanarTree& t, const PlanarTree& s, const PlanarTree& v);

    // The part of second(t, s, v) contributed by leaf subsets with signature
    // (gamma.alpha, gamma.beta), from the product formulas on root components.
    // t must be a node tree.
    Count second_restricted(const PlanarTree& t, const PlanarTree& s, const PlanarTree& v,
                            const GammaPair& gamma);

    void clear();

private:
    struct PairKey {
        std::uint64_t a, b;
        friend bool operator==(const PairKey&, const PairKey&) = default;
    };
    struct TripleKey {
        std::uint64_t a, b, c;
        friend bool operator==(const TripleKey&, const TripleKey&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const PairKey& k) const noexcept;
        std::size_t operator()(const TripleKey& k) const noexcept;
    };

    Count first_node(const PlanarTree& t, const PlanarTree& s);
    Count second_node(const PlanarTree& t, const PlanarTree& s, const PlanarTree& v);

    std::unordered_map<PairKey, Count, KeyHash> first_memo_;
    std::unordered_map<TripleKey, Count, KeyHash> second_memo_;
};

// One-shot conveniences with a private table.
Count binom1(const PlanarTree& t, const PlanarTree& s);
Count binom2(const PlanarTree& t, const PlanarTree& s, const PlanarTree& v);

} // namespace planar

#pragma once

// Planar polynomials and truncated planar power series over the rationals.
//
// A PlanarSeries is a finite map tree -> coefficient. When `truncation` is set
// to N the value stands for a power series known through degree N and no term
// of higher degree is stored. Without a truncation the value is an exact
// polynomial. Binary operations take the smaller of the input truncations.
//
// The m-ary product mu_m acts on monomials by grafting with unit contraction
// (see unit_product); everything else extends multilinearly.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "planar/rational.hpp"
#include "planar/tree.hpp"

namespace planar {

using Truncation = std::optional<std::size_t>;

Truncation min_truncation(Truncation a, Truncation b);

class PlanarSeries {
public:
    using Terms = std::map<PlanarTree, Rational>;

    PlanarSeries() = default;
    explicit PlanarSeries(Truncation truncation) : truncation_(truncation) {}

    static PlanarSeries monomial(const PlanarTree& t, const Rational& c = 1,
                                 Truncation truncation = std::nullopt);
    static PlanarSeries one() { return monomial(PlanarTree::empty()); }
    static PlanarSeries x() { return monomial(PlanarTree::leaf()); }
    static PlanarSeries one_plus_x();

    const Terms& terms() const noexcept { return terms_; }
    Truncation truncation() const noexcept { return truncation_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Rational coeff(const PlanarTree& t) const;
    Rational constant_term() const { return coeff(PlanarTree::empty()); }
    // Largest stored degree, 0 for the zero series.
    std::size_t max_degree() const;

    // Adds c * x^t. Terms above the truncation are ignored, zero sums are erased.
    void add_term(const PlanarTree& t, const Rational& c);

    // Copy with the truncation lowered to n (terms above n dropped).
    PlanarSeries truncated(std::size_t n) const;
    // Terms of degree exactly k.
    PlanarSeries homogeneous_part(std::size_t k) const;

    friend bool operator==(const PlanarSeries&, const PlanarSeries&) = default;

private:
    Terms terms_;
    Truncation truncation_;
};

// Coefficient-wise equality on every tree of degree <= n.
bool agree_through(const PlanarSeries& a, const PlanarSeries& b, std::size_t n);

PlanarSeries add(const PlanarSeries& f, const PlanarSeries& g);
PlanarSeries subtract(const PlanarSeries& f, const PlanarSeries& g);
PlanarSeries scale(const PlanarSeries& f, const Rational& c);

// mu_m(parts...), m = parts.size() >= 2. The result keeps the min truncation of
// the parts, further lowered to max_degree when given.
PlanarSeries mul(std::span<const PlanarSeries> parts, Truncation max_degree = std::nullopt);
PlanarSeries mul(const PlanarSeries& f, const PlanarSeries& g);

// f^T = .T(f, ..., f). t must not be empty.
PlanarSeries power(const PlanarSeries& f, const PlanarTree& t,
                   Truncation max_degree = std::nullopt);

// T^S: S-grafting of deg(S) copies of T.
PlanarTree tree_power(const PlanarTree& t, const PlanarTree& s);

// f o g: x^T -> g^T. g must have zero constant term.
PlanarSeries compose(const PlanarSeries& f, const PlanarSeries& g,
                     Truncation max_degree = std::nullopt);

// d/dx; on x^T this is the sum over leaves of the contraction deleting that leaf.
PlanarSeries derive(const PlanarSeries& f);

// Elements of K{x} (x) K{x}.
class TensorSeries {
public:
    using Key = std::pair<PlanarTree, PlanarTree>;
    using Terms = std::map<Key, Rational>;

    TensorSeries() = default;
    explicit TensorSeries(Truncation truncation) : truncation_(truncation) {}

    const Terms& terms() const noexcept { return terms_; }
    Truncation truncation() const noexcept { return truncation_; }
    Rational coeff(const PlanarTree& left, const PlanarTree& right) const;

    // Terms whose total degree exceeds the truncation are ignored.
    void add_term(const PlanarTree& left, const PlanarTree& right, const Rational& c);

    // x (x) y -> y (x) x
    TensorSeries swapped() const;

    friend bool operator==(const TensorSeries&, const TensorSeries&) = default;

private:
    Terms terms_;
    Truncation truncation_;
};

// Component-wise m-ary product on tensors and the induced T-th power.
TensorSeries mul(std::span<const TensorSeries> parts);
TensorSeries power(const TensorSeries& f, const PlanarTree& t);

// Delta(x^T) by summing x^{T|I} (x) x^{T|I'} over leaf subsets.
TensorSeries coaddition(const PlanarTree& t);
// Delta(x^T) = .T(Delta x, ..., Delta x) in the tensor algebra.
TensorSeries coaddition_structural(const PlanarTree& t);
// Delta extended linearly to a series; keeps the truncation of f.
TensorSeries delta(const PlanarSeries& f);

// Truncated one-variable power series a_0 + a_1 y + ... + a_N y^N.
struct ClassicalSeries {
    std::vector<Rational> coeffs;

    friend bool operator==(const ClassicalSeries&, const ClassicalSeries&) = default;
};

ClassicalSeries to_classical(const PlanarSeries& f, std::size_t n);
ClassicalSeries classical_product(const ClassicalSeries& a, const ClassicalSeries& b);

} // namespace planar

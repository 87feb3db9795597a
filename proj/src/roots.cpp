#include "planar/roots.hpp"

#include <map>
#include <stdexcept>

namespace planar {

namespace {

void require_root_index(const PlanarTree& t) {
    if (t.degree() < 2) throw std::invalid_argument("root index tree needs degree >= 2");
}

mpz_class binomial(std::size_t n, std::size_t k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

// Degree-k coefficients of a minus those of b.
std::map<PlanarTree, Rational> degree_difference(const PlanarSeries& a, const PlanarSeries& b,
                                                 std::size_t k) {
    std::map<PlanarTree, Rational> out;
    for (const auto& [w, c] : a.terms())
        if (w.degree() == k) out[w] += c;
    for (const auto& [w, c] : b.terms())
        if (w.degree() == k) out[w] -= c;
    return out;
}

} // namespace

PlanarSeries root(const PlanarTree& t, const PlanarSeries& target, std::size_t max_degree) {
    require_root_index(t);
    if (target.constant_term() != 1) throw std::invalid_argument("root target needs constant term 1");
    if (target.truncation() && *target.truncation() < max_degree)
        throw std::invalid_argument("root target is not known through the requested degree");
    const Rational n(static_cast<long>(t.degree()));
    PlanarSeries f(max_degree);
    f.add_term(PlanarTree::empty(), 1);
    for (std::size_t k = 1; k <= max_degree; ++k) {
        const auto lower = power(f, t, k);
        for (const auto& [w, c] : degree_difference(target, lower, k)) f.add_term(w, c / n);
    }
    return f;
}

PlanarSeries root(const PlanarTree& t, std::size_t max_degree) {
    return root(t, PlanarSeries::one_plus_x(), max_degree);
}

PlanarSeries generalized_root(const PlanarTree& t, const PlanarTree& s, std::size_t max_degree) {
    require_root_index(t);
    return root(t, power(PlanarSeries::one_plus_x(), s, max_degree), max_degree);
}

Rational profile_root_coeff(std::size_t d, const ArityProfile& nu) {
    if (d < 2) throw std::invalid_argument("corona degree must be >= 2");
    if (nu.max_arity() > d) return 0;
    Rational out = pow(Rational(static_cast<long>(d)), -static_cast<long>(nu.degree));
    if ((nu.total_vertices - nu.degree) % 2 != 0) out = -out;
    for (const auto& [k, count] : nu.nu) {
        Rational factor(binomial(d - 1, k - 1), mpz_class(static_cast<unsigned long>(k)));
        factor.canonicalize();
        out *= pow(factor, static_cast<long>(count));
    }
    return out;
}

Rational corona_root_coeff(std::size_t d, const PlanarTree& t) {
    if (t.is_empty()) throw std::invalid_argument("corona_root_coeff needs a non-empty tree");
    return profile_root_coeff(d, arity_profile(t));
}

Rational corona_root_coeff_unnormalized(std::size_t d, const PlanarTree& t) {
    const auto nu = arity_profile(t);
    return corona_root_coeff(d, t) * pow(Rational(static_cast<long>(d)), static_cast<long>(nu.degree));
}

Rational classical_binom(const Rational& q, std::size_t n) {
    Rational out(1);
    for (std::size_t i = 0; i < n; ++i) {
        out *= q - Rational(static_cast<long>(i));
        out /= Rational(static_cast<long>(i + 1));
    }
    return out;
}

Rational catalan_aggregate(std::size_t d, std::size_t n) {
    if (n == 0) throw std::invalid_argument("catalan_aggregate needs n >= 1");
    Rational sum(0);
    for (const auto& nu : profiles_of_degree(n)) {
        Rational count;
        count.get_num() = mpz_class(static_cast<unsigned long>(catalan(nu)));
        sum += count * profile_root_coeff(d, nu);
    }
    return sum;
}

PlanarSeries dilate(const PlanarSeries& f, const Rational& c) {
    PlanarSeries out(f.truncation());
    for (const auto& [w, a] : f.terms()) out.add_term(w, a * pow(c, static_cast<long>(w.degree())));
    return out;
}

PlanarSeries exp_t(const PlanarTree& t, std::size_t max_degree) {
    require_root_index(t);
    const long n = static_cast<long>(t.degree());
    PlanarSeries e(max_degree);
    e.add_term(PlanarTree::empty(), 1);
    e.add_term(PlanarTree::leaf(), 1);
    for (std::size_t k = 2; k <= max_degree; ++k) {
        const Rational divisor = pow(Rational(n), static_cast<long>(k)) - Rational(n);
        const auto lower = power(e, t, k);
        for (const auto& [w, c] : lower.terms())
            if (w.degree() == k) e.add_term(w, c / divisor);
    }
    return e;
}

PlanarSeries log_t(const PlanarTree& t, std::size_t max_degree) {
    require_root_index(t);
    const auto e = exp_t(t, max_degree);
    PlanarSeries logarithm(max_degree);
    logarithm.add_term(PlanarTree::leaf(), 1);
    // The target 1 + x has no terms of degree >= 2.
    for (std::size_t k = 2; k <= max_degree; ++k) {
        const auto lower = compose(e, logarithm, k);
        for (const auto& [w, c] : lower.terms())
            if (w.degree() == k) logarithm.add_term(w, -c);
    }
    return logarithm;
}

} // namespace planar

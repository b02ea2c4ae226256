#pragma once

#include "riesz/rational.hpp"

#include <concepts>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace riesz {

using Rng = std::mt19937_64;

/// Raised when an operation's documented precondition fails; the message
/// names the violated inequality.
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Witness that a space is non-Archimedean: eps != 0 with n*eps <= bound
/// for every integer n, justified by the closed-form certificate rather
/// than sampling.
template <class Element>
struct InfinitesimalWitness {
    Element eps;
    Element bound;
    std::string certificate;
};

/// A concrete Riesz space instance: a rational vector space with exact
/// lattice operations. The order is derived, never stored: x <= y iff
/// x /\ y = x, so the lattice and the order cannot disagree.
template <class S>
concept RieszSpaceModel = requires(const S& s, const typename S::element& x, const Rational& r, Rng& rng) {
    { s.add(x, x) } -> std::same_as<typename S::element>;
    { s.negate(x) } -> std::same_as<typename S::element>;
    { s.scale(r, x) } -> std::same_as<typename S::element>;
    { s.join(x, x) } -> std::same_as<typename S::element>;
    { s.meet(x, x) } -> std::same_as<typename S::element>;
    { s.equal(x, x) } -> std::same_as<bool>;
    { s.zero() } -> std::same_as<typename S::element>;
    { s.unit() } -> std::same_as<typename S::element>;
    { s.is_unit(x) } -> std::same_as<bool>;
    { s.unit_norm(x, x) } -> std::same_as<Rational>;
    { s.archimedean() } -> std::same_as<bool>;
    { s.random_element(rng) } -> std::same_as<typename S::element>;
    { s.random_unit(rng) } -> std::same_as<typename S::element>;
    { s.to_string(x) } -> std::same_as<std::string>;
    { s.name() } -> std::same_as<std::string>;
};

template <RieszSpaceModel S>
typename S::element subtract(const S& s, const typename S::element& x, const typename S::element& y) {
    return s.add(x, s.negate(y));
}

// x <= y  iff  x /\ y = x
template <RieszSpaceModel S>
bool leq(const S& s, const typename S::element& x, const typename S::element& y) {
    return s.equal(s.meet(x, y), x);
}

// |x| = x \/ (-x)
template <RieszSpaceModel S>
typename S::element abs_elem(const S& s, const typename S::element& x) {
    return s.join(x, s.negate(x));
}

// x+ = x \/ 0
template <RieszSpaceModel S>
typename S::element pos_part(const S& s, const typename S::element& x) {
    return s.join(x, s.zero());
}

// x- = (-x) \/ 0
template <RieszSpaceModel S>
typename S::element neg_part(const S& s, const typename S::element& x) {
    return s.join(s.negate(x), s.zero());
}

// x _|_ y  iff  |x| /\ |y| = 0
template <RieszSpaceModel S>
bool is_orthogonal(const S& s, const typename S::element& x, const typename S::element& y) {
    return s.equal(s.meet(abs_elem(s, x), abs_elem(s, y)), s.zero());
}

/// Decomposes 0 <= x <= a + b as x = a' + b' with 0 <= a' <= a and
/// 0 <= b' <= b, via a' = x /\ a. Preconditions are reported with the
/// failing inequality.
template <RieszSpaceModel S>
std::pair<typename S::element, typename S::element>
riesz_decompose(const S& s, const typename S::element& x, const typename S::element& a,
                const typename S::element& b) {
    auto require = [&](bool ok, const std::string& what) {
        if (!ok) throw precondition_error("riesz_decompose: precondition '" + what + "' fails");
    };
    require(leq(s, s.zero(), x), "0 <= x");
    require(leq(s, s.zero(), a), "0 <= a");
    require(leq(s, s.zero(), b), "0 <= b");
    require(leq(s, x, s.add(a, b)), "x <= a + b");
    auto a_prime = s.meet(x, a);
    auto b_prime = subtract(s, x, a_prime);
    return {a_prime, b_prime};
}

/// Deterministic small rational: numerator in [-100, 100], denominator
/// in [1, 10]. Small exact values keep brute-force oracles fast while
/// still exercising sign and scale cases.
inline Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<long long> num(-100, 100);
    std::uniform_int_distribution<long long> den(1, 10);
    return Rational(num(rng), den(rng));
}

inline Rational random_positive_rational(Rng& rng) {
    std::uniform_int_distribution<long long> num(1, 100);
    std::uniform_int_distribution<long long> den(1, 10);
    return Rational(num(rng), den(rng));
}

/// Outcome of checking one law on seeded random inputs. A failing report
/// carries the first counterexample, rendered with both sides so it can
/// be replayed through the public API.
struct LawReport {
    std::string law;
    int cases_run = 0;
    bool passed = true;
    std::string counterexample;
};

namespace detail {

// Runs `check` on `cases` seeded inputs; stops at the first counterexample.
template <class CheckFn>
LawReport run_law(const std::string& name, int cases, Rng& rng, CheckFn&& check) {
    LawReport report;
    report.law = name;
    for (int i = 0; i < cases; ++i) {
        ++report.cases_run;
        std::optional<std::string> cex = check(rng);
        if (cex) {
            report.passed = false;
            report.counterexample = *cex;
            break;
        }
    }
    return report;
}

} // namespace detail

/// Checks every identity of the elementary lattice calculus plus the
/// decomposition, norm, and order-recovery properties on `cases`
/// pseudo-random inputs per law, deterministically from `seed`.
/// Archimedean-only norm laws are skipped on non-Archimedean instances.
template <RieszSpaceModel S>
std::vector<LawReport> check_laws(const S& s, int cases, std::uint64_t seed) {
    if (cases < 1) throw precondition_error("check_laws: case_count must be >= 1");
    std::vector<LawReport> out;
    Rng rng(seed);

    using E = typename S::element;
    auto eq = [&](const E& l, const E& r) { return s.equal(l, r); };
    auto cex2 = [&](const E& x, const E& y, const E& lhs, const E& rhs) {
        return "x=" + s.to_string(x) + " y=" + s.to_string(y) + " lhs=" + s.to_string(lhs) +
               " rhs=" + s.to_string(rhs);
    };

    auto law = [&](const std::string& name, auto&& check) {
        out.push_back(detail::run_law(name, cases, rng, check));
    };

    // Lemma-level lattice identities.
    law("scale-join-homogeneity", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r), y = s.random_element(r);
        Rational lam = random_rational(r).abs();
        E lhs = s.scale(lam, s.join(x, y));
        E rhs = s.join(s.scale(lam, x), s.scale(lam, y));
        if (eq(lhs, rhs)) return std::nullopt;
        return "lambda=" + lam.str() + " " + cex2(x, y, lhs, rhs);
    });
    law("negate-join-meet", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r), y = s.random_element(r);
        E lhs = s.negate(s.join(x, y));
        E rhs = s.meet(s.negate(x), s.negate(y));
        if (eq(lhs, rhs)) return std::nullopt;
        return cex2(x, y, lhs, rhs);
    });
    law("translate-join", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r), y = s.random_element(r), a = s.random_element(r);
        E lhs = s.join(s.add(x, a), s.add(y, a));
        E rhs = s.add(s.join(x, y), a);
        if (eq(lhs, rhs)) return std::nullopt;
        return "a=" + s.to_string(a) + " " + cex2(x, y, lhs, rhs);
    });
    law("join-plus-meet", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r), y = s.random_element(r);
        E lhs = s.add(s.join(x, y), s.meet(x, y));
        E rhs = s.add(x, y);
        if (eq(lhs, rhs)) return std::nullopt;
        return cex2(x, y, lhs, rhs);
    });
    law("meet-join-distrib", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r), y = s.random_element(r), a = s.random_element(r);
        E lhs = s.join(s.meet(x, y), a);
        E rhs = s.meet(s.join(x, a), s.join(y, a));
        if (eq(lhs, rhs)) return std::nullopt;
        return "a=" + s.to_string(a) + " " + cex2(x, y, lhs, rhs);
    });

    // Absolute-value calculus.
    law("pos-neg-difference", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r);
        E lhs = subtract(s, pos_part(s, x), neg_part(s, x));
        if (eq(lhs, x)) return std::nullopt;
        return "x=" + s.to_string(x) + " x+ - x- = " + s.to_string(lhs);
    });
    law("abs-sum-parts", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r);
        E lhs = abs_elem(s, x);
        E rhs = s.add(pos_part(s, x), neg_part(s, x));
        if (eq(lhs, rhs)) return std::nullopt;
        return "x=" + s.to_string(x) + " |x|=" + s.to_string(lhs) + " x+ + x- = " + s.to_string(rhs);
    });
    law("abs-nonnegative", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r);
        if (leq(s, s.zero(), abs_elem(s, x))) return std::nullopt;
        return "x=" + s.to_string(x) + " |x|=" + s.to_string(abs_elem(s, x)) + " not >= 0";
    });
    law("abs-join-parts", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r);
        E lhs = abs_elem(s, x);
        E rhs = s.join(pos_part(s, x), neg_part(s, x));
        if (eq(lhs, rhs)) return std::nullopt;
        return "x=" + s.to_string(x) + " |x|=" + s.to_string(lhs) + " x+ \\/ x- = " + s.to_string(rhs);
    });
    law("parts-orthogonal", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r);
        if (is_orthogonal(s, pos_part(s, x), neg_part(s, x))) return std::nullopt;
        return "x=" + s.to_string(x) + " x+ not _|_ x-";
    });
    law("abs-homogeneity", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r);
        Rational lam = random_rational(r);
        E lhs = abs_elem(s, s.scale(lam, x));
        E rhs = s.scale(lam.abs(), abs_elem(s, x));
        if (eq(lhs, rhs)) return std::nullopt;
        return "lambda=" + lam.str() + " x=" + s.to_string(x) + " lhs=" + s.to_string(lhs) +
               " rhs=" + s.to_string(rhs);
    });
    law("abs-definite", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r);
        if (!eq(abs_elem(s, x), s.zero()) || eq(x, s.zero())) return std::nullopt;
        return "x=" + s.to_string(x) + " has |x|=0 but x != 0";
    });
    law("pos-part-subadditive", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r), y = s.random_element(r);
        E lhs = pos_part(s, s.add(x, y));
        E rhs = s.add(pos_part(s, x), pos_part(s, y));
        if (leq(s, lhs, rhs)) return std::nullopt;
        return cex2(x, y, lhs, rhs);
    });
    law("abs-triangle", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r), y = s.random_element(r);
        E lhs = abs_elem(s, s.add(x, y));
        E rhs = s.add(abs_elem(s, x), abs_elem(s, y));
        if (leq(s, lhs, rhs)) return std::nullopt;
        return cex2(x, y, lhs, rhs);
    });
    law("join-from-abs", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r), y = s.random_element(r);
        Rational half(1, 2);
        E lhs = s.join(x, y);
        E rhs = s.add(s.scale(half, s.add(x, y)), abs_elem(s, s.scale(half, subtract(s, x, y))));
        if (eq(lhs, rhs)) return std::nullopt;
        return cex2(x, y, lhs, rhs);
    });

    law("riesz-decomposition", [&](Rng& r) -> std::optional<std::string> {
        // Build a valid triple: a, b >= 0 random, x = a' + b' with 0 <= a' <= a.
        E a = abs_elem(s, s.random_element(r));
        E b = abs_elem(s, s.random_element(r));
        E x = s.meet(abs_elem(s, s.random_element(r)), s.add(a, b));
        try {
            auto [ap, bp] = riesz_decompose(s, x, a, b);
            bool ok = eq(s.add(ap, bp), x) && leq(s, s.zero(), ap) && leq(s, ap, a) &&
                      leq(s, s.zero(), bp) && leq(s, bp, b);
            if (ok) return std::nullopt;
            return "x=" + s.to_string(x) + " a=" + s.to_string(a) + " b=" + s.to_string(b) +
                   " a'=" + s.to_string(ap) + " b'=" + s.to_string(bp);
        } catch (const precondition_error& e) {
            // a triple built this way is valid in any lattice, so a failed
            // precondition already convicts the operations
            return "x=" + s.to_string(x) + " a=" + s.to_string(a) + " b=" + s.to_string(b) +
                   ": " + e.what();
        }
    });

    // Unit (semi)norm laws.
    law("norm-triangle", [&](Rng& r) -> std::optional<std::string> {
        E u = s.random_unit(r);
        E x = s.random_element(r), y = s.random_element(r);
        Rational lhs = s.unit_norm(s.add(x, y), u);
        Rational rhs = s.unit_norm(x, u) + s.unit_norm(y, u);
        if (lhs <= rhs) return std::nullopt;
        return "u=" + s.to_string(u) + " " + cex2(x, y, x, y) + " |x+y|_u=" + lhs.str() +
               " |x|_u+|y|_u=" + rhs.str();
    });
    law("norm-homogeneity", [&](Rng& r) -> std::optional<std::string> {
        E u = s.random_unit(r);
        E x = s.random_element(r);
        Rational lam = random_rational(r);
        Rational lhs = s.unit_norm(s.scale(lam, x), u);
        Rational rhs = lam.abs() * s.unit_norm(x, u);
        if (lhs == rhs) return std::nullopt;
        return "u=" + s.to_string(u) + " lambda=" + lam.str() + " x=" + s.to_string(x) +
               " lhs=" + lhs.str() + " rhs=" + rhs.str();
    });
    if (s.archimedean()) {
        law("norm-definite", [&](Rng& r) -> std::optional<std::string> {
            E u = s.random_unit(r);
            E x = s.random_element(r);
            if (!(s.unit_norm(x, u) == Rational(0)) || eq(x, s.zero())) return std::nullopt;
            return "x=" + s.to_string(x) + " has |x|_u=0 but x != 0, u=" + s.to_string(u);
        });
        law("norm-domination", [&](Rng& r) -> std::optional<std::string> {
            E u = s.random_unit(r);
            E x = s.random_element(r);
            E bound = s.scale(s.unit_norm(x, u), u);
            if (leq(s, abs_elem(s, x), bound)) return std::nullopt;
            return "x=" + s.to_string(x) + " u=" + s.to_string(u) + " |x| not <= |x|_u * u";
        });
    }
    law("norm-equivalence", [&](Rng& r) -> std::optional<std::string> {
        E e = s.random_unit(r), u = s.random_unit(r);
        E x = s.random_element(r);
        Rational xe = s.unit_norm(x, e), xu = s.unit_norm(x, u);
        Rational eu = s.unit_norm(e, u), ue = s.unit_norm(u, e);
        // (1/|e|_u) |x|_u <= |x|_e <= |u|_e |x|_u
        if (xu <= eu * xe && xe <= ue * xu) return std::nullopt;
        return "e=" + s.to_string(e) + " u=" + s.to_string(u) + " x=" + s.to_string(x);
    });

    law("order-recovery", [&](Rng& r) -> std::optional<std::string> {
        E x = s.random_element(r), y = s.random_element(r);
        bool le = leq(s, x, y);
        bool join_is_y = eq(s.join(x, y), y);
        bool meet_is_x = eq(s.meet(x, y), x);
        if (le == join_is_y && le == meet_is_x) return std::nullopt;
        return cex2(x, y, s.join(x, y), s.meet(x, y));
    });

    return out;
}

/// Names of the fifteen elementary lattice identities, in check order.
inline std::vector<std::string> lattice_law_names() {
    return {"scale-join-homogeneity", "negate-join-meet", "translate-join", "join-plus-meet",
            "meet-join-distrib",      "pos-neg-difference", "abs-sum-parts", "abs-nonnegative",
            "abs-join-parts",         "parts-orthogonal",  "abs-homogeneity", "abs-definite",
            "pos-part-subadditive",   "abs-triangle",      "join-from-abs"};
}

} // namespace riesz

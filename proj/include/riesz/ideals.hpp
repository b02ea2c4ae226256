#pragma once

#include "riesz/core.hpp"
#include "riesz/spaces.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace riesz {

/// A Riesz ideal of R^n encoded by its zero set: D_S = { x : x_i = 0 for
/// all i in S }. Every Riesz ideal of R^n is of this form (a standard
/// fact the library does not re-prove; is_riesz_ideal verifies the
/// soundness direction on samples).
struct SupportIdeal {
    std::size_t n = 0;
    std::vector<std::size_t> zero_set; // sorted, unique, each < n

    bool contains(const Vec& x) const;
    bool is_proper() const { return !zero_set.empty(); } // D_S = E iff S is empty
    std::string str() const;
};

/// A Riesz homomorphism R^n -> R^m in normal form: output coordinate j
/// is c_j * x_{sigma(j)} with c_j > 0. This is the finite-dimensional
/// classification of Riesz homomorphisms; the lattice-preservation laws
/// are verified empirically in the tests rather than assumed.
class FinHom {
public:
    struct Entry {
        std::size_t source_index;
        Rational coeff; // > 0
    };

    FinHom(std::size_t source_dim, std::vector<Entry> entries);

    static FinHom identity(std::size_t n);

    std::size_t source_dim() const { return source_dim_; }
    std::size_t target_dim() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }

    Vec apply(const Vec& x) const;

    /// this after inner: (*this) o inner.
    FinHom compose(const FinHom& inner) const;

    /// c_j * u_{sigma(j)} = u'_j for every output coordinate j.
    bool preserves_units(const Vec& source_unit, const Vec& target_unit) const;

    bool operator==(const FinHom& o) const;

private:
    std::size_t source_dim_;
    std::vector<Entry> entries_;
};

/// A unit-preserving Riesz homomorphism R^n -> R in normal form:
/// phi(x) = coeff * x_index with coeff = 1/u_index > 0.
struct SpectrumPoint {
    std::size_t index = 0;
    Rational coeff = Rational(1);

    Rational eval(const Vec& x) const { return coeff * x[index]; }
    bool operator==(const SpectrumPoint&) const = default;
};

/// The annihilator a^perp = { x : x _|_ a }, i.e. the support ideal with
/// zero set = support of a.
SupportIdeal perp_ideal(const Vec& a);

/// Samples the solidity condition (|x| <= |a|, a in D implies x in D),
/// the positive-cone condition, and linear-subspace closure.
LawReport is_riesz_ideal(const SupportIdeal& d, int samples, std::uint64_t seed);

/// Sampled solidity check against an arbitrary membership predicate over
/// R^n. Used by is_riesz_ideal and by negative fixtures (e.g. the
/// non-solid diagonal of R^2).
template <class Membership, class Sampler>
LawReport check_solid(std::size_t n, Membership&& member, Sampler&& sample_member, int samples,
                      std::uint64_t seed) {
    FinDimSpace space(n);
    Rng rng(seed);
    LawReport report;
    report.law = "riesz-ideal-solid";
    for (int i = 0; i < samples; ++i) {
        ++report.cases_run;
        Vec a = sample_member(rng);
        // shrink coordinatewise so |x| <= |a|
        Vec x(n);
        for (std::size_t j = 0; j < n; ++j) {
            std::uniform_int_distribution<long long> num(-100, 100);
            Rational f(num(rng), 100);
            x[j] = f * a[j];
        }
        if (!member(x)) {
            report.passed = false;
            report.counterexample =
                "a=" + space.to_string(a) + " x=" + space.to_string(x) + " has |x| <= |a| but x not in D";
            break;
        }
    }
    return report;
}

/// Quotient of R^n by a support ideal: x ~ y mod D_S iff x, y agree on S,
/// so q reads off the S coordinates (kernel of q is exactly D_S), carrying
/// the unit along.
struct Quotient {
    bool zero_space = false;       // D = E (empty S); no unit exists downstream
    std::size_t dimension = 0;     // |S|
    std::vector<std::size_t> kept; // S in increasing order
    Vec unit;                      // u restricted to S
    FinHom q;
};

Quotient quotient(std::size_t n, const Vec& u, const SupportIdeal& d);

/// All 2^n support ideals of R^n (n <= 12).
std::vector<SupportIdeal> enumerate_ideals(std::size_t n);

/// The n maximal proper ideals: the coordinate hyperplanes D_{i}.
/// Each quotient is 1-dimensional. Explicit enumeration stands in for the
/// Zorn's-Lemma step available only at finite dimension.
std::vector<SupportIdeal> maximal_ideals(std::size_t n);

/// A unit-preserving functional separating a from 0: phi = (i, 1/u_i) for
/// the smallest index i with a_i != 0, so phi(u) = 1 and phi(a) != 0.
SpectrumPoint separating_hom(const Vec& a, const Vec& u);

} // namespace riesz

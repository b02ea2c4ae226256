#pragma once

#include "riesz/core.hpp"
#include "riesz/ideals.hpp"
#include "riesz/spaces.hpp"

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace riesz {

/// A finite discrete compact Hausdorff space: a list of unique labels.
/// Every map out of it is continuous, so topology never appears
/// explicitly and compactness is plain finiteness.
class FiniteSpace {
public:
    explicit FiniteSpace(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::size_t index_of(const std::string& label) const;

    bool operator==(const FiniteSpace& o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// A (continuous) map between finite spaces, stored as source index ->
/// target index.
class SpaceMap {
public:
    SpaceMap(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> assignment);

    /// Builds from label-to-label pairs; every source label must appear.
    static SpaceMap from_labels(FiniteSpace source, FiniteSpace target,
                                const std::vector<std::pair<std::string, std::string>>& pairs);
    static SpaceMap identity(FiniteSpace x);

    const FiniteSpace& source() const { return source_; }
    const FiniteSpace& target() const { return target_; }
    std::size_t apply(std::size_t source_index) const { return assign_.at(source_index); }
    const std::string& apply_label(const std::string& l) const {
        return target_.label(assign_.at(source_.index_of(l)));
    }
    const std::vector<std::size_t>& assignment() const { return assign_; }

    /// this after inner: (*this) o inner.
    SpaceMap compose(const SpaceMap& inner) const;

    bool operator==(const SpaceMap& o) const {
        return source_ == o.source_ && target_ == o.target_ && assign_ == o.assign_;
    }

private:
    FiniteSpace source_, target_;
    std::vector<std::size_t> assign_;
};

/// Phi(R^n, u): the n unit-preserving Riesz homomorphisms to R, in index
/// order -- the i-th is x |-> x_i / u_i.
std::vector<SpectrumPoint> spectrum(std::size_t n, const Vec& u);

/// The unit-independence bijection Phi_e(E) -> Phi_u(E),
/// phi |-> (x |-> phi(x)/phi(u)); in normal form (i, 1/e_i) |-> (i, 1/u_i).
std::vector<std::pair<SpectrumPoint, SpectrumPoint>> unit_change_iso(std::size_t n, const Vec& e,
                                                                     const Vec& u);

/// The Yosida transform of x: the tuple (phi(x))_phi over spectrum(n, u),
/// i.e. (x_i / u_i)_i. Sends the unit to the constant-one tuple.
Vec yosida_transform(const Vec& x, const Vec& u);

/// Inverse of the transform: multiply coordinatewise by u.
Vec yosida_inverse(const Vec& xhat, const Vec& u);

/// C(X) for finite X: R^{|X|} with the all-ones unit, coordinates in
/// label order.
struct CSpace {
    FinDimSpace space;
    Vec unit;
};
CSpace c_of_space(const FiniteSpace& x);

/// C(f): C(Y) -> C(X) by precomposition, C(f)(g) = g o f. Output
/// coordinate x reads input coordinate f(x) with coefficient 1.
FinHom c_of_map(const SpaceMap& f);

/// Phi(h): Phi(E') -> Phi(E) by precomposition. In normal form, the
/// spectrum point at index j of E' maps to the point at sigma(j) of E.
/// Requires h unit-preserving for (u, u_target).
std::vector<std::pair<SpectrumPoint, SpectrumPoint>>
phi_of_hom(const FinHom& h, const Vec& source_unit, const Vec& target_unit);

/// Point evaluation delta_x in Phi(C(X)): index = position of the label,
/// coefficient 1.
SpectrumPoint delta(const FiniteSpace& x, const std::string& label);

/// Outcome of a round-trip verification; ok == false indicates an
/// implementation bug, never a property of valid input.
struct RoundtripReport {
    bool ok = true;
    std::string detail;
};

/// X ~ Phi(C(X)): checks x |-> delta_x is injective and that the
/// spectrum has exactly |X| points (point separation by indicator
/// functions replaces Urysohn's Lemma at finite scale).
RoundtripReport roundtrip_space(const FiniteSpace& x);

/// (R^n, u) ~ C(Phi(R^n, u)): checks the transform is a unit-preserving
/// Riesz homomorphism on `samples` random elements, injective via
/// separating_hom, and surjective by dimension count (the finite
/// substitute for the Stone-Weierstrass density step).
RoundtripReport roundtrip_algebra(std::size_t n, const Vec& u, int samples, std::uint64_t seed);

/// Naturality square for a unit-preserving h: C Phi(h) o hat = hat o h,
/// expanded pointwise over random elements and all spectrum points.
LawReport check_naturality(const FinHom& h, const Vec& source_unit, const Vec& target_unit,
                           int samples, std::uint64_t seed);

/// Naturality square for a finite-space map f: Phi C(f) o delta = delta o f.
LawReport check_naturality(const SpaceMap& f);

} // namespace riesz

#include "riesz/duality.hpp"

namespace riesz {

FiniteSpace::FiniteSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw std::invalid_argument("FiniteSpace: need at least one point");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw std::invalid_argument("FiniteSpace: duplicate label '" + labels_[i] + "'");
    }
}

std::size_t FiniteSpace::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::invalid_argument("FiniteSpace: unknown label '" + label + "'");
    return it->second;
}

SpaceMap::SpaceMap(FiniteSpace source, FiniteSpace target, std::vector<std::size_t> assignment)
    : source_(std::move(source)), target_(std::move(target)), assign_(std::move(assignment)) {
    if (assign_.size() != source_.size())
        throw std::invalid_argument("SpaceMap: assignment must cover every source point");
    for (std::size_t t : assign_)
        if (t >= target_.size()) throw std::invalid_argument("SpaceMap: target index out of range");
}

SpaceMap SpaceMap::from_labels(FiniteSpace source, FiniteSpace target,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
    std::vector<std::size_t> assign(source.size(), target.size());
    for (const auto& [from, to] : pairs) assign.at(source.index_of(from)) = target.index_of(to);
    for (std::size_t t : assign)
        if (t >= target.size()) throw std::invalid_argument("SpaceMap: assignment must be total");
    return SpaceMap(std::move(source), std::move(target), std::move(assign));
}

SpaceMap SpaceMap::identity(FiniteSpace x) {
    std::vector<std::size_t> assign(x.size());
    for (std::size_t i = 0; i < assign.size(); ++i) assign[i] = i;
    FiniteSpace copy = x;
    return SpaceMap(std::move(copy), std::move(x), std::move(assign));
}

SpaceMap SpaceMap::compose(const SpaceMap& inner) const {
    if (!(inner.target_ == source_)) throw std::invalid_argument("SpaceMap::compose: spaces mismatch");
    std::vector<std::size_t> assign(inner.assign_.size());
    for (std::size_t i = 0; i < assign.size(); ++i) assign[i] = assign_[inner.assign_[i]];
    return SpaceMap(inner.source_, target_, std::move(assign));
}

std::vector<SpectrumPoint> spectrum(std::size_t n, const Vec& u) {
    FinDimSpace space(n);
    if (!space.is_unit(u)) throw precondition_error("spectrum: u is not a unit");
    std::vector<SpectrumPoint> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back({i, Rational(1) / u[i]});
    return out;
}

std::vector<std::pair<SpectrumPoint, SpectrumPoint>> unit_change_iso(std::size_t n, const Vec& e,
                                                                     const Vec& u) {
    auto from = spectrum(n, e);
    auto to = spectrum(n, u);
    std::vector<std::pair<SpectrumPoint, SpectrumPoint>> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.emplace_back(from[i], to[i]);
    return out;
}

Vec yosida_transform(const Vec& x, const Vec& u) {
    FinDimSpace space(x.size());
    if (!space.is_unit(u)) throw precondition_error("yosida_transform: u is not a unit");
    Vec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] / u[i];
    return out;
}

Vec yosida_inverse(const Vec& xhat, const Vec& u) {
    if (xhat.size() != u.size()) throw std::invalid_argument("yosida_inverse: dimension mismatch");
    Vec out(xhat.size());
    for (std::size_t i = 0; i < xhat.size(); ++i) out[i] = xhat[i] * u[i];
    return out;
}

CSpace c_of_space(const FiniteSpace& x) {
    FinDimSpace space(x.size());
    return CSpace{space, space.unit()};
}

FinHom c_of_map(const SpaceMap& f) {
    std::vector<FinHom::Entry> entries;
    entries.reserve(f.source().size());
    for (std::size_t x = 0; x < f.source().size(); ++x) entries.push_back({f.apply(x), Rational(1)});
    return FinHom(f.target().size(), std::move(entries));
}

std::vector<std::pair<SpectrumPoint, SpectrumPoint>>
phi_of_hom(const FinHom& h, const Vec& source_unit, const Vec& target_unit) {
    if (!h.preserves_units(source_unit, target_unit))
        throw precondition_error("phi_of_hom: h is not unit-preserving");
    auto from = spectrum(h.target_dim(), target_unit);
    std::vector<std::pair<SpectrumPoint, SpectrumPoint>> out;
    out.reserve(from.size());
    for (std::size_t j = 0; j < from.size(); ++j) {
        std::size_t i = h.entries()[j].source_index;
        out.emplace_back(from[j], SpectrumPoint{i, Rational(1) / source_unit[i]});
    }
    return out;
}

SpectrumPoint delta(const FiniteSpace& x, const std::string& label) {
    return SpectrumPoint{x.index_of(label), Rational(1)};
}

RoundtripReport roundtrip_space(const FiniteSpace& x) {
    RoundtripReport report;
    auto cx = c_of_space(x);
    auto phi = spectrum(cx.space.dimension(), cx.unit);
    if (phi.size() != x.size()) {
        report.ok = false;
        report.detail = "spectrum size " + std::to_string(phi.size()) + " != |X| = " +
                        std::to_string(x.size());
        return report;
    }
    // delta is injective: distinct labels yield distinct spectrum indices.
    std::vector<bool> hit(x.size(), false);
    for (const auto& l : x.labels()) {
        SpectrumPoint d = delta(x, l);
        if (hit[d.index]) {
            report.ok = false;
            report.detail = "delta not injective at label '" + l + "'";
            return report;
        }
        hit[d.index] = true;
        if (!(d == phi[d.index])) {
            report.ok = false;
            report.detail = "delta_" + l + " is not a spectrum point";
            return report;
        }
    }
    report.detail = "bijection of size " + std::to_string(x.size());
    return report;
}

RoundtripReport roundtrip_algebra(std::size_t n, const Vec& u, int samples, std::uint64_t seed) {
    RoundtripReport report;
    FinDimSpace e(n);
    if (!e.is_unit(u)) throw precondition_error("roundtrip_algebra: u is not a unit");
    FinDimSpace cphi(n); // C(Phi(E)) with unit all-ones
    auto fail = [&](const std::string& why) {
        report.ok = false;
        report.detail = why;
        return report;
    };

    if (yosida_transform(u, u) != cphi.unit()) return fail("transform does not send u to the ones");

    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        Vec x = e.random_element(rng), y = e.random_element(rng);
        Rational lam = random_rational(rng);
        Vec xh = yosida_transform(x, u), yh = yosida_transform(y, u);
        if (yosida_transform(e.add(x, y), u) != cphi.add(xh, yh))
            return fail("transform not additive at x=" + e.to_string(x) + " y=" + e.to_string(y));
        if (yosida_transform(e.scale(lam, x), u) != cphi.scale(lam, xh))
            return fail("transform not homogeneous at x=" + e.to_string(x));
        if (yosida_transform(e.join(x, y), u) != cphi.join(xh, yh))
            return fail("transform does not preserve join at x=" + e.to_string(x) +
                        " y=" + e.to_string(y));
        if (yosida_transform(e.meet(x, y), u) != cphi.meet(xh, yh))
            return fail("transform does not preserve meet at x=" + e.to_string(x) +
                        " y=" + e.to_string(y));
        if (yosida_inverse(xh, u) != x) return fail("inverse does not recover x=" + e.to_string(x));
        // injectivity witness for nonzero x
        if (x != e.zero()) {
            SpectrumPoint phi = separating_hom(x, u);
            if (phi.eval(u) != Rational(1) || phi.eval(x).is_zero())
                return fail("separating functional failed at x=" + e.to_string(x));
        }
    }
    // Surjectivity by dimension count: the transform maps R^n onto R^n
    // over the spectrum, witnessed by the coordinatewise inverse above.
    if (spectrum(n, u).size() != n) return fail("spectrum size mismatch");
    report.detail = "isomorphism verified on " + std::to_string(samples) + " samples";
    return report;
}

LawReport check_naturality(const FinHom& h, const Vec& source_unit, const Vec& target_unit,
                           int samples, std::uint64_t seed) {
    LawReport report;
    report.law = "naturality-algebra";
    auto pairs = phi_of_hom(h, source_unit, target_unit);
    FinDimSpace e(h.source_dim());
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        ++report.cases_run;
        Vec x = e.random_element(rng);
        Vec xhat = yosida_transform(x, source_unit);
        Vec hx_hat = yosida_transform(h.apply(x), target_unit);
        // C Phi(h)(xhat) at spectrum point j of E' is xhat at Phi(h)(j).
        for (std::size_t j = 0; j < pairs.size(); ++j) {
            if (xhat[pairs[j].second.index] != hx_hat[j]) {
                report.passed = false;
                report.counterexample = "x=" + e.to_string(x) + " spectrum point " + std::to_string(j);
                return report;
            }
        }
    }
    return report;
}

LawReport check_naturality(const SpaceMap& f) {
    LawReport report;
    report.law = "naturality-space";
    auto cf = c_of_map(f);
    auto cx = c_of_space(f.source());
    auto cy = c_of_space(f.target());
    // Phi C(f): Phi(C(X)) -> Phi(C(Y))
    auto pairs = phi_of_hom(cf, cy.unit, cx.unit);
    for (const auto& l : f.source().labels()) {
        ++report.cases_run;
        SpectrumPoint dx = delta(f.source(), l);
        SpectrumPoint image = pairs[dx.index].second;
        SpectrumPoint expected = delta(f.target(), f.apply_label(l));
        if (!(image == expected)) {
            report.passed = false;
            report.counterexample = "label '" + l + "': Phi C(f)(delta) != delta o f";
            return report;
        }
    }
    return report;
}

} // namespace riesz

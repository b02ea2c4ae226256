#include "riesz/ideals.hpp"

#include <algorithm>

namespace riesz {

bool SupportIdeal::contains(const Vec& x) const {
    if (x.size() != n) throw std::invalid_argument("SupportIdeal: dimension mismatch");
    for (std::size_t i : zero_set)
        if (!x[i].is_zero()) return false;
    return true;
}

std::string SupportIdeal::str() const {
    std::string out = "D_S(n=" + std::to_string(n) + ", S={";
    for (std::size_t i = 0; i < zero_set.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(zero_set[i]);
    }
    return out + "})";
}

FinHom::FinHom(std::size_t source_dim, std::vector<Entry> entries)
    : source_dim_(source_dim), entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.source_index >= source_dim_)
            throw std::invalid_argument("FinHom: source index out of range");
        if (!(e.coeff > Rational(0)))
            throw std::invalid_argument("FinHom: coefficients must be positive");
    }
}

FinHom FinHom::identity(std::size_t n) {
    std::vector<Entry> entries;
    entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) entries.push_back({i, Rational(1)});
    return FinHom(n, std::move(entries));
}

Vec FinHom::apply(const Vec& x) const {
    if (x.size() != source_dim_) throw std::invalid_argument("FinHom: dimension mismatch");
    Vec out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.coeff * x[e.source_index]);
    return out;
}

FinHom FinHom::compose(const FinHom& inner) const {
    if (source_dim_ != inner.target_dim())
        throw std::invalid_argument("FinHom::compose: dimension mismatch");
    std::vector<Entry> entries;
    entries.reserve(entries_.size());
    for (const auto& e : entries_) {
        const Entry& through = inner.entries_[e.source_index];
        entries.push_back({through.source_index, e.coeff * through.coeff});
    }
    return FinHom(inner.source_dim_, std::move(entries));
}

bool FinHom::preserves_units(const Vec& source_unit, const Vec& target_unit) const {
    if (source_unit.size() != source_dim_ || target_unit.size() != entries_.size())
        throw std::invalid_argument("FinHom::preserves_units: dimension mismatch");
    for (std::size_t j = 0; j < entries_.size(); ++j)
        if (entries_[j].coeff * source_unit[entries_[j].source_index] != target_unit[j]) return false;
    return true;
}

bool FinHom::operator==(const FinHom& o) const {
    if (source_dim_ != o.source_dim_ || entries_.size() != o.entries_.size()) return false;
    for (std::size_t j = 0; j < entries_.size(); ++j)
        if (entries_[j].source_index != o.entries_[j].source_index ||
            entries_[j].coeff != o.entries_[j].coeff)
            return false;
    return true;
}

SupportIdeal perp_ideal(const Vec& a) {
    SupportIdeal d;
    d.n = a.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) d.zero_set.push_back(i);
    return d;
}

LawReport is_riesz_ideal(const SupportIdeal& d, int samples, std::uint64_t seed) {
    FinDimSpace space(d.n);
    // Random member of D: random coordinates outside S, zero on S.
    auto sample_member = [&](Rng& rng) {
        Vec a = space.random_element(rng);
        for (std::size_t i : d.zero_set) a[i] = Rational(0);
        return a;
    };
    auto member = [&](const Vec& x) { return d.contains(x); };

    LawReport report = check_solid(d.n, member, sample_member, samples, seed);
    report.law = "riesz-ideal";
    if (!report.passed) return report;

    // Positive-cone condition: 0 <= x <= a with a in D+ implies x in D.
    // Plus linear-subspace closure under random combinations.
    Rng rng(seed + 1);
    for (int i = 0; i < samples; ++i) {
        Vec a = sample_member(rng);
        for (auto& c : a) c = c.abs();
        Vec x(d.n);
        for (std::size_t j = 0; j < d.n; ++j) {
            std::uniform_int_distribution<long long> num(0, 100);
            x[j] = Rational(num(rng), 100) * a[j];
        }
        if (!d.contains(x)) {
            report.passed = false;
            report.counterexample = "0 <= " + space.to_string(x) + " <= " + space.to_string(a) +
                                    " in D+ but x not in D";
            return report;
        }
        Vec u = sample_member(rng), v = sample_member(rng);
        Vec combo = space.add(space.scale(random_rational(rng), u), space.scale(random_rational(rng), v));
        if (!d.contains(combo)) {
            report.passed = false;
            report.counterexample = "linear combination " + space.to_string(combo) + " escaped D";
            return report;
        }
    }
    return report;
}

Quotient quotient(std::size_t n, const Vec& u, const SupportIdeal& d) {
    if (d.n != n || u.size() != n) throw std::invalid_argument("quotient: dimension mismatch");
    Quotient out{false, 0, {}, {}, FinHom(n, {})};
    // x ~ y mod D_S iff x and y agree on S, so the quotient reads off the
    // S coordinates: kernel of the projection is exactly D_S.
    std::vector<FinHom::Entry> entries;
    for (std::size_t i : d.zero_set) {
        out.kept.push_back(i);
        out.unit.push_back(u[i]);
        entries.push_back({i, Rational(1)});
    }
    out.dimension = out.kept.size();
    out.zero_space = out.kept.empty();
    out.q = FinHom(n, std::move(entries));
    return out;
}

std::vector<SupportIdeal> enumerate_ideals(std::size_t n) {
    if (n < 1 || n > 12) throw std::invalid_argument("enumerate_ideals: need 1 <= n <= 12");
    std::vector<SupportIdeal> out;
    out.reserve(std::size_t(1) << n);
    for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
        SupportIdeal d;
        d.n = n;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) d.zero_set.push_back(i);
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<SupportIdeal> maximal_ideals(std::size_t n) {
    if (n < 1) throw std::invalid_argument("maximal_ideals: need n >= 1");
    std::vector<SupportIdeal> out;
    out.reserve(n);
    // The maximal proper ideals are the coordinate hyperplanes D_{i};
    // each quotient reads off the one coordinate, hence is R itself.
    for (std::size_t i = 0; i < n; ++i) out.push_back(SupportIdeal{n, {i}});
    return out;
}

SpectrumPoint separating_hom(const Vec& a, const Vec& u) {
    FinDimSpace space(a.size());
    if (!space.is_unit(u)) throw precondition_error("separating_hom: u is not a unit");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i].is_zero()) return SpectrumPoint{i, Rational(1) / u[i]};
    }
    throw precondition_error("separating_hom: a must be nonzero");
}

} // namespace riesz

#pragma once

#include "riesz/core.hpp"
#include "riesz/piecewise_linear.hpp"
#include "riesz/rational.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace riesz {

using Vec = std::vector<Rational>;

/// R^n with the coordinatewise order: the finite-discrete function space
/// C(X) for |X| = n. Archimedean; default unit is all-ones.
class FinDimSpace {
public:
    using element = Vec;

    explicit FinDimSpace(std::size_t n) : n_(n) {
        if (n < 1) throw std::invalid_argument("FinDimSpace: dimension must be >= 1");
    }

    std::size_t dimension() const { return n_; }

    element add(const element& a, const element& b) const {
        check(a);
        check(b);
        element out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = a[i] + b[i];
        return out;
    }
    element negate(const element& a) const {
        check(a);
        element out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = -a[i];
        return out;
    }
    element scale(const Rational& c, const element& a) const {
        check(a);
        element out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = c * a[i];
        return out;
    }
    element join(const element& a, const element& b) const {
        check(a);
        check(b);
        element out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = max(a[i], b[i]);
        return out;
    }
    element meet(const element& a, const element& b) const {
        check(a);
        check(b);
        element out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = min(a[i], b[i]);
        return out;
    }
    bool equal(const element& a, const element& b) const {
        check(a);
        check(b);
        return a == b;
    }

    element zero() const { return element(n_, Rational(0)); }
    element unit() const { return element(n_, Rational(1)); }

    bool is_unit(const element& u) const {
        check(u);
        for (const auto& c : u)
            if (!(c > Rational(0))) return false;
        return true;
    }

    // max_i |x_i| / u_i: the least lambda with |x| <= lambda * u.
    Rational unit_norm(const element& x, const element& u) const {
        require_unit(u);
        check(x);
        Rational best(0);
        for (std::size_t i = 0; i < n_; ++i) best = max(best, x[i].abs() / u[i]);
        return best;
    }

    bool archimedean() const { return true; }

    // The pointwise order forces any infinitesimal to 0 coordinatewise.
    std::optional<InfinitesimalWitness<element>> find_infinitesimal() const { return std::nullopt; }

    element random_element(Rng& rng) const {
        element out(n_);
        for (auto& c : out) c = random_rational(rng);
        return out;
    }
    element random_unit(Rng& rng) const {
        element out(n_);
        for (auto& c : out) c = random_positive_rational(rng);
        return out;
    }

    std::string to_string(const element& a) const {
        std::string out = "(";
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i) out += ',';
            out += a[i].str();
        }
        return out + ")";
    }
    std::string name() const { return "fin:" + std::to_string(n_); }

private:
    void check(const element& a) const {
        if (a.size() != n_) throw std::invalid_argument("FinDimSpace: dimension mismatch");
    }
    void require_unit(const element& u) const {
        if (!is_unit(u)) throw precondition_error("FinDimSpace: element is not a unit");
    }
    std::size_t n_;
};

struct LexElement {
    Rational first;
    Rational second;
    bool operator==(const LexElement&) const = default;
};

/// R^2 with the lexicographic order: totally ordered but not Archimedean.
/// The counterexample instance for everything unit-norm-degenerate.
///
/// Units are exactly the elements with first coordinate > 0: (n, 0)
/// lex-dominates any fixed element once n is large enough, while (0, y)
/// can never dominate (1, 0). Note the paper's infinitesimal definition
/// quantifies over n in Z while the unit definition uses n in N; each
/// operation here follows its own definition verbatim.
class LexPlane {
public:
    using element = LexElement;

    static bool lex_leq(const element& a, const element& b) {
        return a.first < b.first || (a.first == b.first && a.second <= b.second);
    }

    element add(const element& a, const element& b) const { return {a.first + b.first, a.second + b.second}; }
    element negate(const element& a) const { return {-a.first, -a.second}; }
    element scale(const Rational& c, const element& a) const { return {c * a.first, c * a.second}; }
    element join(const element& a, const element& b) const { return lex_leq(a, b) ? b : a; }
    element meet(const element& a, const element& b) const { return lex_leq(a, b) ? a : b; }
    bool equal(const element& a, const element& b) const { return a == b; }

    element zero() const { return {Rational(0), Rational(0)}; }
    element unit() const { return {Rational(1), Rational(0)}; }

    bool is_unit(const element& u) const { return u.first > Rational(0); }

    // inf { lambda : |x| <=_lex lambda * u } = first(|x|) / first(u).
    // Only a seminorm: (0, y) has norm 0 without being 0.
    Rational unit_norm(const element& x, const element& u) const {
        if (!is_unit(u)) throw precondition_error("LexPlane: element is not a unit");
        element ax = join(x, negate(x));
        return ax.first / u.first;
    }

    bool archimedean() const { return false; }

    std::optional<InfinitesimalWitness<element>> find_infinitesimal() const {
        InfinitesimalWitness<element> w;
        w.eps = {Rational(0), Rational(1)};
        w.bound = {Rational(1), Rational(0)};
        w.certificate =
            "for every integer n, n*(0,1) = (0,n) <=_lex (1,0) because 0 < 1 in the first coordinate";
        return w;
    }

    element random_element(Rng& rng) const { return {random_rational(rng), random_rational(rng)}; }
    element random_unit(Rng& rng) const { return {random_positive_rational(rng), random_rational(rng)}; }

    std::string to_string(const element& a) const {
        return "(" + a.first.str() + "," + a.second.str() + ")";
    }
    std::string name() const { return "lex"; }
};

/// Exact piecewise-linear functions on [0,1]: a unital, point-separating
/// Riesz subspace of C[0,1]. Archimedean but deliberately NOT uniformly
/// complete (uniform limits of PL functions need not be PL) -- the
/// instance showing why completeness is a separate axiom. No completion
/// is attempted.
class PLSpace {
public:
    using element = PLFunction;

    element add(const element& a, const element& b) const { return pl_add(a, b); }
    element negate(const element& a) const { return pl_negate(a); }
    element scale(const Rational& c, const element& a) const { return pl_scale(c, a); }
    element join(const element& a, const element& b) const { return pl_join(a, b); }
    element meet(const element& a, const element& b) const { return pl_meet(a, b); }
    bool equal(const element& a, const element& b) const { return a == b; }

    element zero() const { return PLFunction::constant(Rational(0)); }
    element unit() const { return PLFunction::constant(Rational(1)); }

    bool is_unit(const element& u) const { return u.min_value() > Rational(0); }

    Rational unit_norm(const element& x, const element& u) const {
        if (!is_unit(u)) throw precondition_error("PLSpace: element is not a unit");
        return pl_unit_norm(x, u);
    }

    bool archimedean() const { return true; }

    // Any infinitesimal must vanish at every breakpoint, hence be 0.
    std::optional<InfinitesimalWitness<element>> find_infinitesimal() const { return std::nullopt; }

    element random_element(Rng& rng) const {
        std::uniform_int_distribution<int> count(0, 4);
        int interior = count(rng);
        std::vector<Rational> ts{Rational(0)};
        for (int i = 0; i < interior; ++i) {
            std::uniform_int_distribution<long long> den(2, 12);
            long long q = den(rng);
            std::uniform_int_distribution<long long> num(1, q - 1);
            Rational t(num(rng), q);
            bool fresh = true;
            for (const auto& seen : ts)
                if (seen == t) fresh = false;
            if (fresh) ts.push_back(t);
        }
        ts.push_back(Rational(1));
        std::sort(ts.begin(), ts.end());
        std::vector<Rational> vs(ts.size());
        for (auto& v : vs) v = random_rational(rng);
        return PLFunction(std::move(ts), std::move(vs));
    }
    element random_unit(Rng& rng) const {
        element f = random_element(rng);
        std::vector<Rational> vs;
        vs.reserve(f.values().size());
        for (const auto& v : f.values()) vs.push_back(v.abs() + random_positive_rational(rng));
        return PLFunction(f.breakpoints(), std::move(vs));
    }

    std::string to_string(const element& a) const { return a.str(); }
    std::string name() const { return "pl"; }
};

static_assert(RieszSpaceModel<FinDimSpace>);
static_assert(RieszSpaceModel<LexPlane>);
static_assert(RieszSpaceModel<PLSpace>);

} // namespace riesz

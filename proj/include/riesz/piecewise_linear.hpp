#pragma once

#include "riesz/rational.hpp"

#include <string>
#include <vector>

namespace riesz {

/// Continuous piecewise-linear function on [0,1] with exact rational
/// breakpoints and values. Always held in canonical form: breakpoints
/// strictly increasing from 0 to 1 and no interior breakpoint where the
/// adjacent slopes agree, so structural equality equals semantic equality.
///
/// The family is closed under pointwise max/min because the crossing
/// parameter of two rational-coefficient segments is itself rational.
class PLFunction {
public:
    /// Builds the interpolant of (breakpoints, values) and canonicalizes.
    /// Breakpoints must be strictly increasing with first = 0, last = 1.
    PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values);

    static PLFunction constant(const Rational& c);
    static PLFunction identity();

    const std::vector<Rational>& breakpoints() const { return ts_; }
    const std::vector<Rational>& values() const { return vs_; }

    /// Exact linear interpolation; t must lie in [0,1].
    Rational eval(const Rational& t) const;

    Rational min_value() const;
    Rational max_value() const;

    bool operator==(const PLFunction& o) const { return ts_ == o.ts_ && vs_ == o.vs_; }
    bool operator!=(const PLFunction& o) const { return !(*this == o); }

    std::string str() const;

    friend PLFunction pl_add(const PLFunction& f, const PLFunction& g);
    friend PLFunction pl_scale(const Rational& c, const PLFunction& f);
    friend PLFunction pl_negate(const PLFunction& f);
    friend PLFunction pl_join(const PLFunction& f, const PLFunction& g);
    friend PLFunction pl_meet(const PLFunction& f, const PLFunction& g);

private:
    struct raw_tag {};
    PLFunction(raw_tag, std::vector<Rational> ts, std::vector<Rational> vs);
    void canonicalize();

    std::vector<Rational> ts_;
    std::vector<Rational> vs_;
};

PLFunction pl_add(const PLFunction& f, const PLFunction& g);
PLFunction pl_scale(const Rational& c, const PLFunction& f);
PLFunction pl_negate(const PLFunction& f);

/// Exact pointwise max: refines to the common breakpoints, inserts the
/// rational crossing point on every segment where f - g changes sign.
PLFunction pl_join(const PLFunction& f, const PLFunction& g);
PLFunction pl_meet(const PLFunction& f, const PLFunction& g);

/// Unit norm sup |f|(t)/u(t); u must have min value > 0. Exact: |f|/u is
/// a ratio of linear functions on each refined segment, hence monotone
/// there (its derivative has the constant sign of a cross-determinant),
/// so the sup is attained at a breakpoint of the refinement.
Rational pl_unit_norm(const PLFunction& f, const PLFunction& u);

} // namespace riesz

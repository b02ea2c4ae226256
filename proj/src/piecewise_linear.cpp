#include "riesz/piecewise_linear.hpp"

#include <algorithm>
#include <stdexcept>

namespace riesz {

namespace {

// Merged, strictly increasing union of two breakpoint sequences.
std::vector<Rational> merge_breakpoints(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j] < a[i]) {
            out.push_back(b[j++]);
        } else {
            out.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

PLFunction::PLFunction(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : ts_(std::move(breakpoints)), vs_(std::move(values)) {
    if (ts_.size() < 2 || ts_.size() != vs_.size())
        throw std::invalid_argument("PLFunction: need matching breakpoint/value lists of length >= 2");
    if (ts_.front() != Rational(0) || ts_.back() != Rational(1))
        throw std::invalid_argument("PLFunction: breakpoints must start at 0 and end at 1");
    for (std::size_t i = 1; i < ts_.size(); ++i)
        if (!(ts_[i - 1] < ts_[i]))
            throw std::invalid_argument("PLFunction: breakpoints must be strictly increasing");
    canonicalize();
}

PLFunction::PLFunction(raw_tag, std::vector<Rational> ts, std::vector<Rational> vs)
    : ts_(std::move(ts)), vs_(std::move(vs)) {
    canonicalize();
}

void PLFunction::canonicalize() {
    // Drop interior breakpoints where the two adjacent slopes coincide.
    std::vector<Rational> ts, vs;
    ts.push_back(ts_.front());
    vs.push_back(vs_.front());
    for (std::size_t i = 1; i + 1 < ts_.size(); ++i) {
        // slope equality: (v_i - v_prev)(t_next - t_i) == (v_next - v_i)(t_i - t_prev)
        const Rational& tp = ts.back();
        const Rational& vp = vs.back();
        Rational lhs = (vs_[i] - vp) * (ts_[i + 1] - ts_[i]);
        Rational rhs = (vs_[i + 1] - vs_[i]) * (ts_[i] - tp);
        if (lhs != rhs) {
            ts.push_back(ts_[i]);
            vs.push_back(vs_[i]);
        }
    }
    ts.push_back(ts_.back());
    vs.push_back(vs_.back());
    ts_ = std::move(ts);
    vs_ = std::move(vs);
}

PLFunction PLFunction::constant(const Rational& c) {
    return PLFunction({Rational(0), Rational(1)}, {c, c});
}

PLFunction PLFunction::identity() {
    return PLFunction({Rational(0), Rational(1)}, {Rational(0), Rational(1)});
}

Rational PLFunction::eval(const Rational& t) const {
    if (t < Rational(0) || t > Rational(1))
        throw std::invalid_argument("PLFunction::eval: argument outside [0,1]");
    auto it = std::upper_bound(ts_.begin(), ts_.end(), t);
    std::size_t hi = std::min<std::size_t>(it - ts_.begin(), ts_.size() - 1);
    std::size_t lo = hi - 1;
    if (t == ts_[lo]) return vs_[lo];
    return vs_[lo] + (vs_[hi] - vs_[lo]) * (t - ts_[lo]) / (ts_[hi] - ts_[lo]);
}

Rational PLFunction::min_value() const {
    Rational m = vs_.front();
    for (const auto& v : vs_) m = min(m, v);
    return m;
}

Rational PLFunction::max_value() const {
    Rational m = vs_.front();
    for (const auto& v : vs_) m = max(m, v);
    return m;
}

std::string PLFunction::str() const {
    std::string out = "pl[";
    for (std::size_t i = 0; i < ts_.size(); ++i) {
        if (i) out += ' ';
        out += '(' + ts_[i].str() + ',' + vs_[i].str() + ')';
    }
    return out + ']';
}

PLFunction pl_add(const PLFunction& f, const PLFunction& g) {
    auto ts = merge_breakpoints(f.ts_, g.ts_);
    std::vector<Rational> vs;
    vs.reserve(ts.size());
    for (const auto& t : ts) vs.push_back(f.eval(t) + g.eval(t));
    return PLFunction(PLFunction::raw_tag{}, std::move(ts), std::move(vs));
}

PLFunction pl_scale(const Rational& c, const PLFunction& f) {
    std::vector<Rational> vs;
    vs.reserve(f.vs_.size());
    for (const auto& v : f.vs_) vs.push_back(c * v);
    return PLFunction(PLFunction::raw_tag{}, f.ts_, std::move(vs));
}

PLFunction pl_negate(const PLFunction& f) { return pl_scale(Rational(-1), f); }

PLFunction pl_join(const PLFunction& f, const PLFunction& g) {
    auto base = merge_breakpoints(f.ts_, g.ts_);
    std::vector<Rational> ts, vs;
    ts.reserve(base.size() + 4);
    vs.reserve(base.size() + 4);
    Rational dl = f.eval(base[0]) - g.eval(base[0]);
    ts.push_back(base[0]);
    vs.push_back(max(f.eval(base[0]), g.eval(base[0])));
    for (std::size_t i = 1; i < base.size(); ++i) {
        Rational dr = f.eval(base[i]) - g.eval(base[i]);
        if (dl.sign() * dr.sign() < 0) {
            // f - g is linear on [base[i-1], base[i]] and changes sign strictly:
            // insert the exact crossing t* where f(t*) = g(t*).
            Rational t_star = base[i - 1] + dl * (base[i] - base[i - 1]) / (dl - dr);
            ts.push_back(t_star);
            vs.push_back(f.eval(t_star));
        }
        ts.push_back(base[i]);
        vs.push_back(max(f.eval(base[i]), g.eval(base[i])));
        dl = dr;
    }
    return PLFunction(PLFunction::raw_tag{}, std::move(ts), std::move(vs));
}

PLFunction pl_meet(const PLFunction& f, const PLFunction& g) {
    return pl_negate(pl_join(pl_negate(f), pl_negate(g)));
}

Rational pl_unit_norm(const PLFunction& f, const PLFunction& u) {
    if (!(u.min_value() > Rational(0)))
        throw std::invalid_argument("pl_unit_norm: u is not a unit (min value <= 0)");
    PLFunction af = pl_join(f, pl_negate(f)); // breakpoints include f's zero crossings
    auto ts = merge_breakpoints(af.breakpoints(), u.breakpoints());
    Rational best(0);
    for (const auto& t : ts) best = max(best, af.eval(t) / u.eval(t));
    return best;
}

} // namespace riesz

#include "riesz/approx.hpp"

#include <algorithm>
#include <stdexcept>

namespace riesz {

struct LatticeExpr::Node {
    Kind kind;
    std::size_t gen_index = 0;
    Rational value; // Const value or Scale coefficient
    std::vector<LatticeExpr> children;
};

LatticeExpr LatticeExpr::gen(std::size_t index) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Gen;
    node->gen_index = index;
    return LatticeExpr(std::move(node));
}

LatticeExpr LatticeExpr::constant(Rational value) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Const;
    node->value = std::move(value);
    return LatticeExpr(std::move(node));
}

LatticeExpr LatticeExpr::add(LatticeExpr left, LatticeExpr right) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Add;
    node->children = {std::move(left), std::move(right)};
    return LatticeExpr(std::move(node));
}

LatticeExpr LatticeExpr::scale(Rational coeff, LatticeExpr child) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Scale;
    node->value = std::move(coeff);
    node->children = {std::move(child)};
    return LatticeExpr(std::move(node));
}

LatticeExpr LatticeExpr::join(std::vector<LatticeExpr> children) {
    if (children.empty()) throw std::invalid_argument("LatticeExpr: join needs children");
    if (children.size() == 1) return children.front();
    auto node = std::make_shared<Node>();
    node->kind = Kind::Join;
    node->children = std::move(children);
    return LatticeExpr(std::move(node));
}

LatticeExpr LatticeExpr::meet(std::vector<LatticeExpr> children) {
    if (children.empty()) throw std::invalid_argument("LatticeExpr: meet needs children");
    if (children.size() == 1) return children.front();
    auto node = std::make_shared<Node>();
    node->kind = Kind::Meet;
    node->children = std::move(children);
    return LatticeExpr(std::move(node));
}

LatticeExpr::Kind LatticeExpr::kind() const { return node_->kind; }
std::size_t LatticeExpr::gen_index() const { return node_->gen_index; }
const Rational& LatticeExpr::value() const { return node_->value; }
const Rational& LatticeExpr::coeff() const { return node_->value; }
const LatticeExpr& LatticeExpr::left() const { return node_->children.at(0); }
const LatticeExpr& LatticeExpr::right() const { return node_->children.at(1); }
const LatticeExpr& LatticeExpr::child() const { return node_->children.at(0); }
const std::vector<LatticeExpr>& LatticeExpr::children() const { return node_->children; }

std::size_t LatticeExpr::size() const {
    std::size_t total = 1;
    for (const auto& c : node_->children) total += c.size();
    return total;
}

bool LatticeExpr::operator==(const LatticeExpr& o) const {
    if (node_ == o.node_) return true;
    if (node_->kind != o.node_->kind || node_->gen_index != o.node_->gen_index ||
        node_->value != o.node_->value || node_->children.size() != o.node_->children.size())
        return false;
    for (std::size_t i = 0; i < node_->children.size(); ++i)
        if (!(node_->children[i] == o.node_->children[i])) return false;
    return true;
}

GeneratorSet::GeneratorSet(FiniteSpace domain, std::vector<std::string> names,
                           std::vector<std::vector<Rational>> values)
    : domain_(std::move(domain)), names_(std::move(names)), values_(std::move(values)), one_index_(0) {
    if (names_.empty() || names_.size() != values_.size())
        throw std::invalid_argument("GeneratorSet: need matching names and value tables");
    for (const auto& v : values_)
        if (v.size() != domain_.size())
            throw std::invalid_argument("GeneratorSet: value table must cover the domain");
    // locate the constant-one generator
    bool found_one = false;
    for (std::size_t g = 0; g < values_.size() && !found_one; ++g) {
        bool all_one = true;
        for (const auto& v : values_[g])
            if (v != Rational(1)) all_one = false;
        if (all_one) {
            one_index_ = g;
            found_one = true;
        }
    }
    if (!found_one) throw std::invalid_argument("GeneratorSet: must contain the constant-one function");
    // point separation
    for (std::size_t x = 0; x < domain_.size(); ++x) {
        for (std::size_t y = x + 1; y < domain_.size(); ++y) {
            bool separated = false;
            for (std::size_t g = 0; g < values_.size() && !separated; ++g)
                if (values_[g][x] != values_[g][y]) separated = true;
            if (!separated)
                throw std::invalid_argument("GeneratorSet: generators do not separate points '" +
                                            domain_.label(x) + "' and '" + domain_.label(y) + "'");
        }
    }
}

Rational eval_expr(const LatticeExpr& expr, const GeneratorSet& gens, std::size_t point) {
    if (point >= gens.domain().size()) throw std::invalid_argument("eval_expr: unknown point");
    switch (expr.kind()) {
    case LatticeExpr::Kind::Gen:
        if (expr.gen_index() >= gens.count())
            throw std::invalid_argument("eval_expr: generator index out of range");
        return gens.value(expr.gen_index(), point);
    case LatticeExpr::Kind::Const:
        return expr.value();
    case LatticeExpr::Kind::Add:
        return eval_expr(expr.left(), gens, point) + eval_expr(expr.right(), gens, point);
    case LatticeExpr::Kind::Scale:
        return expr.coeff() * eval_expr(expr.child(), gens, point);
    case LatticeExpr::Kind::Join: {
        Rational best = eval_expr(expr.children().front(), gens, point);
        for (std::size_t i = 1; i < expr.children().size(); ++i)
            best = max(best, eval_expr(expr.children()[i], gens, point));
        return best;
    }
    case LatticeExpr::Kind::Meet: {
        Rational best = eval_expr(expr.children().front(), gens, point);
        for (std::size_t i = 1; i < expr.children().size(); ++i)
            best = min(best, eval_expr(expr.children()[i], gens, point));
        return best;
    }
    }
    throw std::logic_error("eval_expr: unreachable");
}

LatticeExpr separator(std::size_t y, std::size_t z, const Rational& g_z, const GeneratorSet& gens) {
    if (y == z) throw std::invalid_argument("separator: y and z must differ");
    for (std::size_t g = 0; g < gens.count(); ++g) {
        const Rational& fy = gens.value(g, y);
        const Rational& fz = gens.value(g, z);
        if (fy != fz) {
            Rational c = g_z / (fz - fy);
            // c * (f - f(y) * 1)
            LatticeExpr affine =
                LatticeExpr::add(LatticeExpr::gen(g),
                                 LatticeExpr::scale(-fy, LatticeExpr::gen(gens.one_index())));
            return LatticeExpr::scale(c, std::move(affine));
        }
    }
    throw std::logic_error("separator: no separating generator (GeneratorSet invariant violated)");
}

namespace {

// Greedy minimum-ish cover: repeatedly keep the candidate covering the
// most uncovered points, ties broken by first index.
std::vector<std::size_t> greedy_cover(const std::vector<std::vector<bool>>& covers, std::size_t points) {
    std::vector<bool> covered(points, false);
    std::size_t remaining = points;
    std::vector<std::size_t> chosen;
    while (remaining > 0) {
        std::size_t best = covers.size();
        std::size_t best_gain = 0;
        for (std::size_t c = 0; c < covers.size(); ++c) {
            std::size_t gain = 0;
            for (std::size_t p = 0; p < points; ++p)
                if (!covered[p] && covers[c][p]) ++gain;
            if (gain > best_gain) {
                best = c;
                best_gain = gain;
            }
        }
        if (best == covers.size())
            throw std::logic_error("greedy_cover: candidates do not cover the domain");
        chosen.push_back(best);
        for (std::size_t p = 0; p < points; ++p)
            if (covers[best][p]) {
                if (!covered[p]) --remaining;
                covered[p] = true;
            }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

// One covering pass for a pointwise-nonnegative part, with half-budget
// `half` in the U and V membership sets. Guarantees
// part - half*1 <= result <= part + half*1 at every domain point.
LatticeExpr approximate_part(const std::vector<Rational>& part, const GeneratorSet& gens,
                             const Rational& half, bool minimize) {
    const std::size_t n = gens.domain().size();
    std::vector<LatticeExpr> sheets; // one f'_z per kept z
    std::vector<std::vector<Rational>> sheet_values;

    std::vector<LatticeExpr> all_sheets;
    for (std::size_t z = 0; z < n; ++z) {
        std::vector<LatticeExpr> lines;
        std::vector<std::size_t> ys;
        for (std::size_t y = 0; y < n; ++y)
            if (y != z) ys.push_back(y);

        if (minimize) {
            // U_{f_y} = { x : f_y(x) < part(x) + half }; keep a greedy subcover.
            std::vector<std::vector<bool>> covers(ys.size(), std::vector<bool>(n, false));
            std::vector<LatticeExpr> candidates;
            for (std::size_t k = 0; k < ys.size(); ++k) {
                LatticeExpr fy = separator(ys[k], z, part[z], gens);
                for (std::size_t x = 0; x < n; ++x)
                    covers[k][x] = eval_expr(fy, gens, x) < part[x] + half;
                candidates.push_back(std::move(fy));
            }
            for (std::size_t k : greedy_cover(covers, n)) lines.push_back(candidates[k]);
        } else {
            // The full finite family is already a subcover.
            for (std::size_t y : ys) lines.push_back(separator(y, z, part[z], gens));
        }

        LatticeExpr sheet = LatticeExpr::meet(std::move(lines));
        std::vector<Rational> values(n);
        for (std::size_t x = 0; x < n; ++x) values[x] = eval_expr(sheet, gens, x);
        if (values[z] != part[z])
            throw std::logic_error("sw_approximate: f'_z(z) != g(z) at z=" + std::to_string(z));
        for (std::size_t x = 0; x < n; ++x)
            if (!(values[x] <= part[x] + half))
                throw std::logic_error("sw_approximate: f'_z exceeds g + eps/2 at x=" +
                                       std::to_string(x));
        all_sheets.push_back(std::move(sheet));
        sheet_values.push_back(std::move(values));
    }

    std::vector<std::size_t> kept;
    if (minimize) {
        // V_{f'_z} = { x : part(x) - half < f'_z(x) }
        std::vector<std::vector<bool>> covers(n, std::vector<bool>(n, false));
        for (std::size_t z = 0; z < n; ++z)
            for (std::size_t x = 0; x < n; ++x) covers[z][x] = part[x] - half < sheet_values[z][x];
        kept = greedy_cover(covers, n);
    } else {
        for (std::size_t z = 0; z < n; ++z) kept.push_back(z);
    }
    for (std::size_t z : kept) sheets.push_back(all_sheets[z]);
    LatticeExpr g0 = LatticeExpr::join(std::move(sheets));

    for (std::size_t x = 0; x < n; ++x) {
        Rational v = eval_expr(g0, gens, x);
        if (!(part[x] - half <= v && v <= part[x] + half))
            throw std::logic_error("sw_approximate: two-sided eps/2 bound violated at x=" +
                                   std::to_string(x));
    }
    return g0;
}

} // namespace

LatticeExpr sw_approximate(const SampledTarget& g, const GeneratorSet& gens, const Rational& eps,
                           const SwOptions& options) {
    if (!(eps > Rational(0))) throw precondition_error("sw_approximate: eps must be positive");
    if (!(g.domain == gens.domain()))
        throw std::invalid_argument("sw_approximate: target and generators disagree on the domain");
    const std::size_t n = g.domain.size();
    if (n == 1) return LatticeExpr::constant(g.values.at(0)); // exact

    std::vector<Rational> pos(n), neg(n);
    for (std::size_t i = 0; i < n; ++i) {
        pos[i] = max(g.values[i], Rational(0));
        neg[i] = max(-g.values[i], Rational(0));
    }
    Rational half = eps / Rational(2); // budget eps/2 per part
    LatticeExpr p0 = approximate_part(pos, gens, half, options.minimize_cover);
    LatticeExpr n0 = approximate_part(neg, gens, half, options.minimize_cover);
    return LatticeExpr::add(std::move(p0), LatticeExpr::scale(Rational(-1), std::move(n0)));
}

Rational expr_error(const LatticeExpr& expr, const GeneratorSet& gens, const SampledTarget& g) {
    Rational worst(0);
    for (std::size_t x = 0; x < g.domain.size(); ++x)
        worst = max(worst, (g.values[x] - eval_expr(expr, gens, x)).abs());
    return worst;
}

PLFunction expr_to_pl(const LatticeExpr& expr, const std::vector<PLFunction>& gen_realizations) {
    switch (expr.kind()) {
    case LatticeExpr::Kind::Gen:
        if (expr.gen_index() >= gen_realizations.size())
            throw std::invalid_argument("expr_to_pl: missing PL realization for generator " +
                                        std::to_string(expr.gen_index()));
        return gen_realizations[expr.gen_index()];
    case LatticeExpr::Kind::Const:
        return PLFunction::constant(expr.value());
    case LatticeExpr::Kind::Add:
        return pl_add(expr_to_pl(expr.left(), gen_realizations),
                      expr_to_pl(expr.right(), gen_realizations));
    case LatticeExpr::Kind::Scale:
        return pl_scale(expr.coeff(), expr_to_pl(expr.child(), gen_realizations));
    case LatticeExpr::Kind::Join: {
        PLFunction out = expr_to_pl(expr.children().front(), gen_realizations);
        for (std::size_t i = 1; i < expr.children().size(); ++i)
            out = pl_join(out, expr_to_pl(expr.children()[i], gen_realizations));
        return out;
    }
    case LatticeExpr::Kind::Meet: {
        PLFunction out = expr_to_pl(expr.children().front(), gen_realizations);
        for (std::size_t i = 1; i < expr.children().size(); ++i)
            out = pl_meet(out, expr_to_pl(expr.children()[i], gen_realizations));
        return out;
    }
    }
    throw std::logic_error("expr_to_pl: unreachable");
}

FiniteSpace uniform_grid(std::size_t points) {
    if (points < 1) throw std::invalid_argument("uniform_grid: need at least one point");
    std::vector<std::string> labels;
    labels.reserve(points);
    if (points == 1) {
        labels.push_back("0");
    } else {
        for (std::size_t i = 0; i < points; ++i)
            labels.push_back(Rational(static_cast<long long>(i), static_cast<long long>(points - 1)).str());
    }
    return FiniteSpace(std::move(labels));
}

std::vector<Rational> grid_coordinates(const FiniteSpace& grid) {
    std::vector<Rational> out;
    out.reserve(grid.size());
    for (const auto& l : grid.labels()) out.push_back(Rational::parse(l));
    return out;
}

GeneratorSet unital_affine_generators(const FiniteSpace& grid) {
    std::vector<Rational> ones(grid.size(), Rational(1));
    std::vector<Rational> coords = grid_coordinates(grid);
    return GeneratorSet(grid, {"one", "id"}, {std::move(ones), std::move(coords)});
}

} // namespace riesz

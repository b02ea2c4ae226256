#pragma once

#include "riesz/duality.hpp"
#include "riesz/piecewise_linear.hpp"
#include "riesz/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace riesz {

/// Expression tree over a generator set, in the lattice signature only:
/// affine combinations, finite meets and finite joins. No products of
/// functions anywhere. Immutable; nodes are shared.
class LatticeExpr {
public:
    enum class Kind { Gen, Const, Add, Scale, Join, Meet };

    static LatticeExpr gen(std::size_t index);
    static LatticeExpr constant(Rational value);
    static LatticeExpr add(LatticeExpr left, LatticeExpr right);
    static LatticeExpr scale(Rational coeff, LatticeExpr child);
    /// children.size() == 1 returns the child itself; >= 2 builds a node.
    static LatticeExpr join(std::vector<LatticeExpr> children);
    static LatticeExpr meet(std::vector<LatticeExpr> children);

    Kind kind() const;
    std::size_t gen_index() const;
    const Rational& value() const;       // Const
    const Rational& coeff() const;       // Scale
    const LatticeExpr& left() const;     // Add
    const LatticeExpr& right() const;    // Add
    const LatticeExpr& child() const;    // Scale
    const std::vector<LatticeExpr>& children() const; // Join/Meet

    /// Node count, for size comparisons.
    std::size_t size() const;

    bool operator==(const LatticeExpr& o) const;

private:
    struct Node;
    explicit LatticeExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// A target function sampled on a finite domain.
struct SampledTarget {
    FiniteSpace domain;
    std::vector<Rational> values; // one per domain point, in label order
};

/// The generator family D: named functions over a shared finite domain.
/// Must contain the constant-one function and separate the points of the
/// domain; both are checked at construction.
class GeneratorSet {
public:
    GeneratorSet(FiniteSpace domain, std::vector<std::string> names,
                 std::vector<std::vector<Rational>> values);

    const FiniteSpace& domain() const { return domain_; }
    std::size_t count() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const Rational& value(std::size_t gen, std::size_t point) const { return values_.at(gen).at(point); }
    const std::vector<Rational>& values_of(std::size_t gen) const { return values_.at(gen); }
    std::size_t one_index() const { return one_index_; }

private:
    FiniteSpace domain_;
    std::vector<std::string> names_;
    std::vector<std::vector<Rational>> values_;
    std::size_t one_index_;
};

/// Exact recursive evaluation at a domain point.
Rational eval_expr(const LatticeExpr& expr, const GeneratorSet& gens, std::size_t point);

/// The two-point separator f_y of the covering construction: the affine
/// expression (g_z / (f(z) - f(y))) * (f - f(y) * 1) over the first
/// generator f with f(y) != f(z). Evaluates to 0 at y and g_z at z.
LatticeExpr separator(std::size_t y, std::size_t z, const Rational& g_z, const GeneratorSet& gens);

struct SwOptions {
    /// Greedy subcover extraction over the U and V membership sets.
    /// Shrinks the expression; off by default (the full finite family is
    /// already a valid cover).
    bool minimize_cover = false;
};

/// Constructive lattice approximation: returns an expression g0 with
/// |g(x) - g0(x)| <= eps at every domain point, built by splitting
/// g = g+ - g- and running the two covering stages on each part with
/// budget eps/2. Internal bounds (f'_z(z) = part(z) and the two-sided
/// eps/2 sandwich) are asserted exactly during construction.
LatticeExpr sw_approximate(const SampledTarget& g, const GeneratorSet& gens, const Rational& eps,
                           const SwOptions& options = {});

/// max over domain points of |g(x) - eval(expr, x)|.
Rational expr_error(const LatticeExpr& expr, const GeneratorSet& gens, const SampledTarget& g);

/// Evaluates the tree in the PL Riesz space, one PLFunction per
/// generator, yielding an exact piecewise-linear realization.
PLFunction expr_to_pl(const LatticeExpr& expr, const std::vector<PLFunction>& gen_realizations);

/// Uniform m-point grid on [0,1]; labels are the rational strings of the
/// grid coordinates.
FiniteSpace uniform_grid(std::size_t points);
std::vector<Rational> grid_coordinates(const FiniteSpace& grid);

/// The generator pair {1, id} sampled on a grid whose labels are
/// rational coordinates.
GeneratorSet unital_affine_generators(const FiniteSpace& grid);

} // namespace riesz

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sphfn/group.hpp"
#include "sphfn/special.hpp"

namespace sphfn::algebra {

enum class Family { spherical, confluent };

/// Evaluation settings carried by every element of the indexed algebra;
/// the element operations never touch it.
struct EvalContext {
    GroupRank1 group;
    double tol = 1e-10;
    special::BesselZeroMode mode = special::BesselZeroMode::continuous;
};

/// An element of the indexed function algebra: a spectral index, a
/// family tag, and a handle to the family's evaluation route. The
/// algebra operations below act on the index alone; two elements are
/// equal iff they share a family and their indices agree up to the
/// reflection lambda -> -lambda.
class IndexedFunction {
public:
    IndexedFunction(cplx index, Family family, std::shared_ptr<const EvalContext> ctx)
        : index_(index), family_(family), ctx_(std::move(ctx))
    {
    }

    static IndexedFunction spherical(cplx index, std::shared_ptr<const EvalContext> ctx)
    {
        return IndexedFunction(index, Family::spherical, std::move(ctx));
    }
    static IndexedFunction confluent(cplx index, std::shared_ptr<const EvalContext> ctx)
    {
        return IndexedFunction(index, Family::confluent, std::move(ctx));
    }

    cplx index() const { return index_; }
    Family family() const { return family_; }
    const std::shared_ptr<const EvalContext>& context() const { return ctx_; }

    /// Pointwise value of the underlying function at radial coordinate t.
    cplx evaluate(double t) const;

    friend bool operator==(const IndexedFunction& x, const IndexedFunction& y)
    {
        return x.family_ == y.family_ && (x.index_ == y.index_ || x.index_ == -y.index_);
    }

private:
    cplx index_;
    Family family_;
    std::shared_ptr<const EvalContext> ctx_;
};

/// Index-level sum: result index lambda1 + lambda2. Families must match.
IndexedFunction delta_add(const IndexedFunction& x, const IndexedFunction& y);

/// Index-level scaling: result index alpha * lambda.
IndexedFunction delta_scale(cplx alpha, const IndexedFunction& x);

/// Index-level product: result index lambda1 * lambda2. Families must
/// match.
IndexedFunction delta_mul(const IndexedFunction& x, const IndexedFunction& y);

/// Family map spherical -> confluent, preserving the index.
IndexedFunction sigma_map(const IndexedFunction& x);

struct AxiomReport {
    std::string label;
    int passes = 0;
    int trials = 0;
};

/// Runs the fifteen algebra axioms (closure, associativity, identities,
/// inverses, distributivity for +, scaling and multiplication) on
/// randomized indices and reports per-axiom pass counts. Indices are
/// drawn with small integer parts so every identity is exact in
/// floating point; the draw is reproducible under a fixed seed.
std::vector<AxiomReport> run_axiom_trials(int trials, std::uint64_t seed);

} // namespace sphfn::algebra

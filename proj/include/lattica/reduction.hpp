#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lattica/context.hpp"
#include "lattica/lattice.hpp"
#include "lattica/rational.hpp"

namespace lattica {

struct CoreResult {
    ObjectSet objects;        // surviving objects H (indices into the source context)
    AttributeSet attributes;  // surviving attributes N
    FormalContext core;       // source restricted to H x N
    std::size_t p = 0;
    std::size_t q = 0;
};

/// Largest subcontext in which every object has >= p attributes and every
/// attribute has >= q objects (greatest fixpoint of degree peeling).
CoreResult pq_core(const FormalContext& ctx, std::size_t p, std::size_t q);

/// counts[i][j] = concept count of the (p_values[i], q_values[j])-core.
std::vector<std::vector<std::size_t>> pq_importance_grid(const FormalContext& ctx,
                                                         const std::vector<std::size_t>& p_values,
                                                         const std::vector<std::size_t>& q_values,
                                                         const EnumerationOptions& opts = {});

/// |B'| / |G|; InputError for a context without objects.
Rational intent_support(const FormalContext& ctx, const AttributeSet& b);

/// Frequent closed intents with their supports, ordered lectically, and the
/// cover relation among them. A join-semilattice: joins always exist, meets
/// only when the meet is frequent.
class IcebergLattice {
public:
    IcebergLattice() = default;
    IcebergLattice(std::vector<AttributeSet> intents, std::vector<Rational> supports, Rational minsupp,
                   std::size_t attributes);

    std::size_t size() const noexcept { return intents_.size(); }
    const std::vector<AttributeSet>& intents() const noexcept { return intents_; }
    const std::vector<Rational>& supports() const noexcept { return supports_; }
    const Rational& minsupp() const noexcept { return minsupp_; }
    /// (lower, upper): lower has the larger intent.
    const std::vector<std::pair<std::size_t, std::size_t>>& covers() const noexcept { return covers_; }

    std::optional<std::size_t> find_intent(const AttributeSet& b) const;

    std::size_t join(const std::vector<std::size_t>& ids) const;
    /// InputError("not present in semilattice") when the meet is infrequent.
    std::size_t meet(const std::vector<std::size_t>& ids) const;

private:
    std::vector<AttributeSet> intents_;
    std::vector<Rational> supports_;
    Rational minsupp_;
    std::size_t attributes_ = 0;
    std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

/// Level-wise key-set (TITANIC) computation of all closed intents with
/// support >= minsupp. Requires minsupp <= 1 and a context with objects.
IcebergLattice titanic_iceberg(const FormalContext& ctx, const Rational& minsupp, const EnumerationOptions& opts = {});

/// Adds "support": "num/den" and "support_decimal" per intent.
std::string iceberg_to_json(const IcebergLattice& ice, const FormalContext& ctx);

}  // namespace lattica

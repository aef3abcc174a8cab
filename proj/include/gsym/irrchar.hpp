#pragma once

#include <memory>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gsym/exactnum.hpp"
#include "gsym/shapes.hpp"
#include "gsym/table.hpp"
#include "gsym/wreath.hpp"

namespace gsym {

/// Rim hooks of size r removable from lambda: (remaining partition, height).
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lambda, int r);

/// Murnaghan-Nakayama evaluation of the irreducible characters of Z_k wr S_n.
///
/// chi^lambda(rho) sums, over ways of peeling rim hooks whose sizes are the
/// gathered parts of rho, the product of (-1)^height * z_k^(f * c), where f
/// is the component the hook is taken from and c the component the part of
/// rho comes from. For k = 2 this is the bipartite rule; for k >= 3 the sign
/// (-1)^(f c) becomes the root of unity z_k^(f c).
///
/// Results are memoized on (remaining shape, remaining parts). The cache is
/// safe to use from several threads.
class CharacterEngine {
public:
    explicit CharacterEngine(int k);

    int k() const { return k_; }
    /// Throws std::invalid_argument on size or arity mismatch.
    Cyclotomic value(const KPartition& lambda, const KPartition& rho);
    /// Same, removing hooks in the given order of (part, component) pairs.
    Cyclotomic value_in_order(const KPartition& lambda, const std::vector<GatheredPart>& parts);
    std::size_t cache_size() const;

private:
    using Key = std::vector<int>;
    struct KeyHash {
        std::size_t operator()(const Key& key) const noexcept;
    };

    Cyclotomic recurse(const KPartition& lambda, const std::vector<GatheredPart>& parts, std::size_t from);

    int k_;
    std::vector<Cyclotomic> roots_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<Key, Cyclotomic, KeyHash> cache_;
};

/// Process-wide engine for Z_k wr S_n.
CharacterEngine& engine_for(int k);

/// chi^lambda at the class of type rho in Z_k wr S_n.
Cyclotomic char_wreath(const KPartition& lambda, const KPartition& rho, int k);
/// chi^lambda at the class of type rho in the hyperoctahedral group (k = 2).
Rational char_bipartite(const KPartition& lambda, const KPartition& rho);
/// chi^lambda(x).
Cyclotomic char_value(const KPartition& lambda, const WreathElement& x);
/// chi^lambda(1) as an integer.
BigInt char_degree(const KPartition& lambda);

/// Irreducible characters by G-classes, both in k_partitions_of() order.
CharacterTable character_table(int n, int k);

/// The sigma with sigma -> lambda, each of multiplicity one, component by component, top row first.
std::vector<KPartition> restriction_decomposition(const KPartition& lambda);

}  // namespace gsym

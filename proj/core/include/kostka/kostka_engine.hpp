#pragma once

// Kostka numbers by horizontal-strip recursion.
//
// The cells holding the largest entry k of a semistandard tableau form a
// horizontal strip at the outer edge of the shape, so
//
//     K(outer/inner, (mu_1..mu_k)) = sum over kappa of K(kappa/inner, (mu_1..mu_{k-1}))
//
// where kappa runs over partitions with inner <= kappa <= outer and
// outer/kappa a horizontal strip of mu_k cells.

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "kostka/count.hpp"
#include "kostka/partition.hpp"
#include "kostka/tableau.hpp"

namespace kostka {

/// Canonical memo key: trailing zeros of the content are stripped; the
/// content order is kept as given.
struct KostkaKey {
    SkewShape shape;
    Composition content;

    KostkaKey(SkewShape s, const Composition& c) : shape(std::move(s)), content(c.normalized()) {}

    friend bool operator==(const KostkaKey&, const KostkaKey&) = default;
};

struct KostkaKeyHash {
    std::size_t operator()(const KostkaKey& k) const noexcept { return k.shape.hash() * 131 + k.content.hash(); }
};

struct EngineOptions {
    bool memoize = true;
    /// Once the cache holds this many entries new results are no longer
    /// stored. Zero means unbounded (the default).
    std::size_t max_cache_entries = 0;
};

/// Memoizing Kostka calculator. Safe to share across threads: lookups and
/// inserts are serialized by a reader/writer lock, and cached values are
/// never changed once stored.
class KostkaEngine {
public:
    explicit KostkaEngine(EngineOptions options = {}) : options_(options) {}

    KostkaEngine(const KostkaEngine&) = delete;
    KostkaEngine& operator=(const KostkaEngine&) = delete;

    /// Throws SizeMismatchError if content.size() != shape.num_cells().
    Count kostka(const SkewShape& shape, const Composition& content);

    std::size_t cache_size() const;
    void clear_cache();

    const EngineOptions& options() const noexcept { return options_; }

private:
    Count compute(const std::vector<int>& outer, const std::vector<int>& inner, std::span<const int> content);
    bool lookup(const KostkaKey& key, Count& out) const;
    void store(const KostkaKey& key, const Count& value);

    EngineOptions options_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<KostkaKey, Count, KostkaKeyHash> cache_;
};

/// One-shot Kostka number with a private cache.
Count kostka(const SkewShape& shape, const Composition& content);

/// Square table of K(lambda, mu) over partitions_of(n); values[l][m] is
/// indexed by the positions of lambda and mu in `order`.
struct KostkaMatrix {
    int n = 0;
    std::vector<Partition> order;
    std::vector<std::vector<Count>> values;

    std::size_t dimension() const noexcept { return order.size(); }
};

KostkaMatrix kostka_matrix(int n, unsigned parallelism = 1);
KostkaMatrix kostka_matrix(int n, KostkaEngine& engine, unsigned parallelism = 1);

} // namespace kostka

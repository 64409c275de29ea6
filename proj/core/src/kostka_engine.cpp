#include "kostka/kostka_engine.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "kostka/errors.hpp"
#include "parallel.hpp"

namespace kostka {

namespace {

std::span<const int> strip_trailing_zeros(std::span<const int> s) {
    std::size_t len = s.size();
    while (len > 0 && s[len - 1] == 0)
        --len;
    return s.first(len);
}

} // namespace

Count KostkaEngine::kostka(const SkewShape& shape, const Composition& content) {
    if (content.size() != shape.num_cells()) {
        throw SizeMismatchError("content has size " + std::to_string(content.size()) + " but the shape has " +
                                std::to_string(shape.num_cells()) + " cells");
    }
    std::vector<int> outer(shape.outer().parts().begin(), shape.outer().parts().end());
    std::vector<int> inner(shape.inner().parts().begin(), shape.inner().parts().end());
    return compute(outer, inner, strip_trailing_zeros(content.parts()));
}

bool KostkaEngine::lookup(const KostkaKey& key, Count& out) const {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end())
        return false;
    out = it->second;
    return true;
}

void KostkaEngine::store(const KostkaKey& key, const Count& value) {
    std::unique_lock lock(mutex_);
    if (options_.max_cache_entries != 0 && cache_.size() >= options_.max_cache_entries)
        return;
    cache_.emplace(key, value);
}

std::size_t KostkaEngine::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

void KostkaEngine::clear_cache() {
    std::unique_lock lock(mutex_);
    cache_.clear();
}

Count KostkaEngine::compute(const std::vector<int>& outer, const std::vector<int>& inner,
                            std::span<const int> content) {
    if (content.empty())
        return 1; // sizes agree, so no cells remain

    std::optional<KostkaKey> key;
    if (options_.memoize) {
        key.emplace(SkewShape(Partition(outer), Partition(inner)),
                    Composition(std::vector<int>(content.begin(), content.end())));
        Count cached;
        if (lookup(*key, cached))
            return cached;
    }

    const int strip = content.back();
    const auto rest = strip_trailing_zeros(content.first(content.size() - 1));
    const std::size_t rows = outer.size();

    // slack[r] = most cells removable from rows r..end.
    std::vector<int> lo(rows), slack(rows + 1, 0);
    for (std::size_t r = 0; r < rows; ++r) {
        const int below = r + 1 < rows ? outer[r + 1] : 0;
        const int in = r < inner.size() ? inner[r] : 0;
        lo[r] = std::max(below, in);
    }
    for (std::size_t r = rows; r-- > 0;)
        slack[r] = slack[r + 1] + (outer[r] - lo[r]);

    Count total = 0;
    if (slack[0] >= strip) {
        std::vector<int> kappa(outer);
        auto place = [&](auto&& self, std::size_t r, int need) -> void {
            if (need == 0) {
                std::size_t len = rows;
                while (len > 0 && kappa[len - 1] == 0)
                    --len;
                std::vector<int> next(kappa.begin(), kappa.begin() + static_cast<long>(len));
                total += compute(next, inner, rest);
                return;
            }
            if (r == rows || slack[r] < need)
                return;
            const int most = std::min(need, outer[r] - lo[r]);
            for (int take = most; take >= 0; --take) {
                kappa[r] = outer[r] - take;
                self(self, r + 1, need - take);
            }
            kappa[r] = outer[r];
        };
        place(place, 0, strip);
    }

    if (key)
        store(*key, total);
    return total;
}

Count kostka(const SkewShape& shape, const Composition& content) {
    KostkaEngine engine;
    return engine.kostka(shape, content);
}

KostkaMatrix kostka_matrix(int n, unsigned parallelism) {
    KostkaEngine engine;
    return kostka_matrix(n, engine, parallelism);
}

KostkaMatrix kostka_matrix(int n, KostkaEngine& engine, unsigned parallelism) {
    KostkaMatrix m;
    m.n = n;
    m.order = partitions_of(n);
    const std::size_t dim = m.order.size();
    m.values.assign(dim, std::vector<Count>(dim));
    detail::parallel_for(dim, parallelism, [&](std::size_t row) {
        const SkewShape shape(m.order[row]);
        for (std::size_t col = 0; col < dim; ++col)
            m.values[row][col] = engine.kostka(shape, m.order[col].as_composition());
    });
    return m;
}

} // namespace kostka

#include "kostka/bounded_counts.hpp"

#include <string>

#include "kostka/errors.hpp"

namespace kostka {

BoundVector::BoundVector(std::vector<int> bounds) : bounds_(std::move(bounds)) {
    for (std::size_t k = 0; k < bounds_.size(); ++k) {
        if (bounds_[k] < 0)
            throw PreconditionError("bound x_" + std::to_string(k + 1) + " is negative");
        total_ += bounds_[k];
    }
}

Count s_count(const BoundVector& x, long a) {
    if (a < 0 || a > x.total())
        return 0;
    // ways[s] = number of solutions over the processed prefix with sum s.
    // Adding a bound b turns ways into a sliding-window sum of width b + 1.
    std::vector<Count> ways(static_cast<std::size_t>(a) + 1, 0);
    ways[0] = 1;
    std::vector<Count> next(ways.size());
    Count window;
    for (int b : x.bounds()) {
        window = 0;
        for (std::size_t s = 0; s < ways.size(); ++s) {
            window += ways[s];
            if (s >= static_cast<std::size_t>(b) + 1)
                window -= ways[s - b - 1];
            next[s] = window;
        }
        ways.swap(next);
    }
    return ways[static_cast<std::size_t>(a)];
}

SplitCount s_split(const BoundVector& x, long a) {
    if (x.length() == 0)
        throw PreconditionError("s_split needs at least one bound");
    const auto b = x.bounds();
    if (b[0] == 0)
        throw PreconditionError("s_split needs x_1 >= 1");
    BoundVector tail(std::vector<int>(b.begin() + 1, b.end()));
    std::vector<int> lowered(b.begin(), b.end());
    --lowered[0];
    return {s_count(tail, a - b[0]), s_count(BoundVector(std::move(lowered)), a)};
}

} // namespace kostka

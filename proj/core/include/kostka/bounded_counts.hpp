#pragma once

// Counting integer vectors y with 0 <= y_k <= x_k and a fixed sum.

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "kostka/count.hpp"

namespace kostka {

/// Upper bounds x_1, ..., x_r (non-negative) together with their total m.
class BoundVector {
public:
    BoundVector() = default;
    explicit BoundVector(std::vector<int> bounds);
    BoundVector(std::initializer_list<int> bounds) : BoundVector(std::vector<int>(bounds)) {}

    std::span<const int> bounds() const noexcept { return bounds_; }
    std::size_t length() const noexcept { return bounds_.size(); }
    int total() const noexcept { return total_; }

    friend bool operator==(const BoundVector&, const BoundVector&) = default;

private:
    std::vector<int> bounds_;
    int total_ = 0;
};

/// Number of y with 0 <= y_k <= x_k and y_1 + ... + y_r = a. Zero whenever
/// a < 0 or a > m; the empty vector has exactly one solution for a = 0.
Count s_count(const BoundVector& x, long a);

struct SplitCount {
    Count top;  ///< solutions with y_1 = x_1
    Count rest; ///< solutions with y_1 < x_1
};

/// Splits s_count(x, a) by whether y_1 attains its bound:
/// top = s_count((x_2..x_r), a - x_1), rest = s_count((x_1 - 1, x_2..x_r), a).
/// Throws PreconditionError when r = 0 or x_1 = 0.
SplitCount s_split(const BoundVector& x, long a);

} // namespace kostka

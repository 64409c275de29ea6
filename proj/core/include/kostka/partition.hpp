#pragma once

// Partitions, compositions, and the dominance order on them.
//
// Indices in documentation and error messages are 1-based: part(1) is the
// first (largest) part. Out-of-range parts read as zero.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

namespace kostka {

class Partition;

/// Finite sequence of non-negative integers. Equality and hashing ignore
/// trailing zeros, so (1,2,0) == (1,2).
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);
    Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return size_; }

    /// 1-based; zero beyond the stored length.
    int part(std::size_t i) const noexcept {
        return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
    }

    /// Same composition with trailing zeros removed.
    Composition normalized() const;

    bool is_partition() const noexcept;

    friend bool operator==(const Composition& a, const Composition& b) noexcept;

    std::size_t hash() const noexcept;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Weakly decreasing sequence of positive integers (canonical: no zero parts).
/// Trailing zeros in the constructor argument are dropped; any other zero or
/// an increase throws PreconditionError.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    int part(std::size_t i) const noexcept {
        return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
    }

    Composition as_composition() const { return Composition(parts_); }

    friend bool operator==(const Partition&, const Partition&) = default;
    /// Lexicographic on parts; descending order of this is reverse-lex order.
    friend auto operator<=>(const Partition& a, const Partition& b) noexcept {
        return a.parts_ <=> b.parts_;
    }

    std::size_t hash() const noexcept;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);
std::ostream& operator<<(std::ostream& os, const Composition& c);

/// Prefix-sum dominance: a dominates b iff a_1+...+a_r >= b_1+...+b_r for all r.
/// Throws SizeMismatchError when the sums differ.
bool dominates(std::span<const int> a, std::span<const int> b);
inline bool dominates(const Partition& a, const Partition& b) { return dominates(a.parts(), b.parts()); }
inline bool dominates(const Composition& a, const Composition& b) { return dominates(a.parts(), b.parts()); }

/// All partitions of n in reverse-lexicographic order, starting from (n).
std::vector<Partition> partitions_of(int n);

/// Compositions of n with a non-zero last part and at most `max_length`
/// parts (interior zeros allowed), in lexicographically decreasing order.
std::vector<Composition> compositions_of(int n, std::size_t max_length);

Partition conjugate(const Partition& p);

struct CoverMove {
    enum class Kind { AdjacentRow, AdjacentColumn };

    Kind kind = Kind::AdjacentRow;
    int i = 1; ///< source row (1-based)
    int j = 2; ///< target row; j == i + 1 for AdjacentRow

    friend bool operator==(const CoverMove&, const CoverMove&) = default;
};

struct Cover {
    CoverMove move;
    Partition nu;

    friend bool operator==(const Cover&, const Cover&) = default;
};

std::ostream& operator<<(std::ostream& os, const CoverMove& m);

/// Moves one box from row move.i to row move.j. Throws PreconditionError if
/// the result is not a partition.
Partition apply_move(const Partition& mu, const CoverMove& move);

/// The partitions covered by mu in the dominance order, in reverse-lex order
/// of the covered partition.
///
/// A box moves from row i to row j > i. Either j = i + 1 and mu_i >= mu_j + 2
/// (row move), or j >= i + 2 with mu_{i+1} = ... = mu_{j-1} = mu_i - 1 and
/// mu_j = mu_i - 2 (column move). When j = i + 1 and mu_j = mu_i - 2 both
/// readings coincide; that cover is reported once, as a row move.
std::vector<Cover> covers(const Partition& mu);

/// A saturated chain mu = p_0, p_1, ..., p_t = nu where each step is a cover.
/// At every step the first cover (reverse-lex) that still dominates nu is
/// taken. Throws SizeMismatchError or NotComparableError.
std::vector<Partition> cover_chain(const Partition& mu, const Partition& nu);

/// Intermediate compositions xi^{i+1}, ..., xi^{j-1} for a column move, where
/// xi^k takes one box from row i and adds it to row k. Consecutive members of
/// mu, xi^{i+1}, ..., xi^{j-1}, nu differ by a single adjacent transfer.
/// Throws PreconditionError for row moves or moves invalid for mu.
std::vector<Composition> adjacent_transfer_chain(const Partition& mu, const CoverMove& move);

/// True when `to` is obtained from `from` by moving one unit from some part r
/// to part r + 1 with from_r > from_{r+1}.
bool is_adjacent_transfer(const Composition& from, const Composition& to);

} // namespace kostka

template <>
struct std::hash<kostka::Partition> {
    std::size_t operator()(const kostka::Partition& p) const noexcept { return p.hash(); }
};

template <>
struct std::hash<kostka::Composition> {
    std::size_t operator()(const kostka::Composition& c) const noexcept { return c.hash(); }
};

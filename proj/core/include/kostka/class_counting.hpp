#pragma once

// Grouping semistandard tableaux by everything except the entries i and i+1.
//
// Two tableaux are in the same class when they agree on every cell whose
// entry is neither i nor i+1. The remaining ("available") cells of a class
// come in two kinds: columns holding two available cells, which are forced to
// read i over i+1, and columns holding one. The single-cell columns of row j
// form a contiguous run of length x_j that may be filled with any number y_j
// of i's followed by i+1's, independently across rows. Hence a class holds
// s_count(x, a) tableaux whose content has target_i = d + a, where d is the
// number of forced columns.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "kostka/count.hpp"
#include "kostka/partition.hpp"
#include "kostka/tableau.hpp"

namespace kostka {

struct ClassSignature {
    SkewShape shape;
    int index = 1;                              ///< the i of the pair (i, i+1)
    std::vector<std::pair<Cell, int>> skeleton; ///< fixed cells, row-major
    std::vector<Cell> available;                ///< cells holding i or i+1, row-major
    int forced_pairs = 0;                       ///< columns with two available cells (d)
    std::vector<int> row_counts;                ///< x_j, one per row of the shape

    friend bool operator==(const ClassSignature&, const ClassSignature&) = default;

    /// Orders classes by shape, index, then skeleton (cell, entry) pairs.
    friend bool operator<(const ClassSignature& a, const ClassSignature& b);

    std::size_t hash() const noexcept;
};

/// Throws PreconditionError if t is not semistandard or i < 1.
ClassSignature signature_of(const Tableau& t, int i);

/// Number of semistandard tableaux in the class with content `target`.
/// Throws SizeMismatchError if target does not match the shape's cell count.
Count count_in_class(const ClassSignature& sig, const Composition& target);

/// mu with one unit moved from part i to part i+1.
Composition transfer(const Composition& mu, int i);

struct TransferCounts {
    Composition nu;
    Count before; ///< K(shape, mu)
    Count after;  ///< K(shape, nu)
};

/// Enumeration counts for mu and its transfer nu = transfer(mu, i).
/// Throws PreconditionError unless mu_i > mu_{i+1}.
TransferCounts adjacent_transfer_holds(const SkewShape& shape, const Composition& mu, int i);

/// Renders the skeleton like a tableau, with available cells drawn as "*".
std::string render_skeleton(const ClassSignature& sig);

} // namespace kostka

template <>
struct std::hash<kostka::ClassSignature> {
    std::size_t operator()(const kostka::ClassSignature& s) const noexcept { return s.hash(); }
};

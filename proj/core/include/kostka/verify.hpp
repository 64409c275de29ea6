#pragma once

// Exhaustive checkers for the statements the library is built around. Every
// checker walks a finite family of cases, counts how many it examined, and
// records each failure instead of stopping at the first one.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "kostka/count.hpp"
#include "kostka/partition.hpp"
#include "kostka/tableau.hpp"

namespace kostka {

struct Violation {
    std::string check;
    std::string detail;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct Report {
    std::string name;
    std::size_t checked = 0;
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Kostka number provider; lets tests substitute a deliberately broken one.
using KostkaFn = std::function<Count(const SkewShape&, const Composition&)>;

/// Straight shapes of every size 0..max_cells.
std::vector<SkewShape> straight_shapes(int max_cells);

/// Non-straight skew shapes with 1..max_cells cells, at most max_rows rows
/// and outer width at most max_cells, up to translation: the first row and
/// the first column both contain a cell.
std::vector<SkewShape> skew_shapes(int max_cells, int max_rows);

/// Positivity of K(lambda, mu) against dominance for all partition pairs of
/// every m <= n.
Report verify_dominance_support(int n, unsigned parallelism = 1);
Report verify_dominance_support(int n, const KostkaFn& k, unsigned parallelism = 1);

/// K(shape, mu) <= K(shape, nu) whenever mu dominates nu, over straight
/// shapes of m <= n and, optionally, skew_shapes(n, 4).
Report verify_monotonicity(int n, bool include_skew, unsigned parallelism = 1);
Report verify_monotonicity(int n, bool include_skew, const KostkaFn& k, unsigned parallelism = 1);

/// Bounded-composition counts for every bound vector of length <= max_length
/// with entries <= max_bound: monotonicity towards m/2, symmetry a <-> m-a,
/// the top/rest split, total normalization, and agreement with brute force.
Report verify_bounded_counts(int max_length = 4, int max_bound = 4);

/// Adjacent transfers for every shape with <= max_cells cells (straight plus
/// skew_shapes(max_cells, 4)), every content in compositions_of(m, m), and
/// every i with mu_i > mu_{i+1}: the totals satisfy K(mu) <= K(nu), and class
/// by class the counts for nu dominate those for mu, match direct filtering,
/// and sum to the totals.
Report verify_class_counting(int max_cells, unsigned parallelism = 1);

/// covers() against the brute-force Hasse diagram for all partitions of
/// every n <= max_n.
Report verify_covers(int max_n);

/// For every cover mu -> nu with |mu| <= max_n: the transfer chain exists,
/// each step is an adjacent transfer, and K(lambda, .) weakly increases along
/// it for every partition lambda of the same size.
Report verify_transfer_chains(int max_n, unsigned parallelism = 1);
Report verify_transfer_chains(int max_n, const KostkaFn& k, unsigned parallelism = 1);

/// DP against enumeration for straight shapes and skew_shapes(max_cells, 4)
/// with every positive composition content, plus straight shapes against all
/// contents in compositions_of(m, m).
Report verify_oracle_equivalence(int max_cells, unsigned parallelism = 1);

/// K(shape, mu) is unchanged under every rearrangement of mu, for every
/// partition mu padded with one zero part, over straight shapes and
/// skew_shapes(max_cells, 4).
Report verify_permutation_invariance(int max_cells, unsigned parallelism = 1);

/// The suite behind `verify --max-n`: dominance support, monotonicity (with skew
/// shapes), bounded counts, class counting, covers and transfer chains.
std::vector<Report> verify_all(int max_n, unsigned parallelism = 1);

std::string to_text(const Report& r);
std::string reports_to_text(const std::vector<Report>& reports);

/// {"suites":[{"name","checked","violations":[...]}], "violations":[...]}
std::string reports_to_json(const std::vector<Report>& reports);

} // namespace kostka

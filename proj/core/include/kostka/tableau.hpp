#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "kostka/count.hpp"
#include "kostka/partition.hpp"

namespace kostka {

/// Box of a diagram, 1-based, English convention (rows grow downward).
struct Cell {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Skew diagram outer/inner. The cells are {(r,c) : inner_r < c <= outer_r};
/// an empty inner partition gives a straight shape.
class SkewShape {
public:
    SkewShape() = default;
    explicit SkewShape(Partition outer, Partition inner = {});

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    bool is_straight() const noexcept { return inner_.empty(); }

    int num_rows() const noexcept { return static_cast<int>(outer_.length()); }
    int num_cells() const noexcept { return outer_.size() - inner_.size(); }

    /// First and last column of row r; the row is empty when first > last.
    int first_col(int r) const noexcept { return inner_.part(r) + 1; }
    int last_col(int r) const noexcept { return outer_.part(r); }
    int row_length(int r) const noexcept { return last_col(r) - first_col(r) + 1; }

    bool contains(Cell c) const noexcept {
        return c.row >= 1 && c.row <= num_rows() && c.col >= first_col(c.row) && c.col <= last_col(c.row);
    }

    /// Cells in row-major order.
    std::vector<Cell> cells() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

    std::size_t hash() const noexcept { return outer_.hash() * 31 + inner_.hash(); }

private:
    Partition outer_;
    Partition inner_;
};

std::ostream& operator<<(std::ostream& os, const SkewShape& s);

/// A filling of every cell of a shape by a positive integer, stored
/// row-major.
class Tableau {
public:
    /// rows[r] lists the entries of the cells of row r+1, left to right.
    Tableau(SkewShape shape, const std::vector<std::vector<int>>& rows);

    /// Entries in row-major cell order.
    static Tableau from_reading(SkewShape shape, std::vector<int> entries);

    const SkewShape& shape() const noexcept { return shape_; }
    std::span<const int> entries() const noexcept { return entries_; }

    /// Throws std::out_of_range for cells outside the shape.
    int at(Cell c) const;

    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const Tableau&, const Tableau&) = default;

private:
    Tableau(SkewShape shape, std::vector<int> entries, int);

    std::size_t index_of(Cell c) const noexcept;

    SkewShape shape_;
    std::vector<int> entries_;
    std::vector<std::size_t> row_offset_;
};

/// Rows weakly increase left to right, columns strictly increase downward.
bool is_semistandard(const Tableau& t);

/// Multiplicity vector; its length is the largest entry (no trailing zeros).
Composition content_of(const Tableau& t);

/// Every semistandard tableau of `shape` with exactly `content`, ordered
/// lexicographically by the row-major reading word. Entries range over
/// 1..content.length(). Throws SizeMismatchError if the sizes differ.
std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, const Composition& content);

/// Number of tableaux enumerate_ssyt would return, without materializing them.
Count count_ssyt(const SkewShape& shape, const Composition& content);

/// Calls visit(entries) for each semistandard filling, in enumerate_ssyt order.
void for_each_ssyt(const SkewShape& shape, const Composition& content,
                   const std::function<void(std::span<const int>)>& visit);

/// One row per line, entries space separated, skew gaps drawn as ".".
std::string render(const Tableau& t);

} // namespace kostka

template <>
struct std::hash<kostka::SkewShape> {
    std::size_t operator()(const kostka::SkewShape& s) const noexcept { return s.hash(); }
};

#include "kostka/tableau.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kostka/errors.hpp"

namespace kostka {

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (inner_.length() > outer_.length())
        throw PreconditionError("inner partition has more rows than the outer partition");
    for (std::size_t r = 1; r <= inner_.length(); ++r) {
        if (inner_.part(r) > outer_.part(r)) {
            throw PreconditionError("inner partition exceeds the outer partition in row " + std::to_string(r));
        }
    }
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    out.reserve(num_cells());
    for (int r = 1; r <= num_rows(); ++r)
        for (int c = first_col(r); c <= last_col(r); ++c)
            out.push_back({r, c});
    return out;
}

std::ostream& operator<<(std::ostream& os, const SkewShape& s) {
    os << s.outer();
    if (!s.is_straight())
        os << '/' << s.inner();
    return os;
}

Tableau::Tableau(SkewShape shape, std::vector<int> entries, int) : shape_(std::move(shape)), entries_(std::move(entries)) {
    if (entries_.size() != static_cast<std::size_t>(shape_.num_cells())) {
        throw PreconditionError("tableau has " + std::to_string(entries_.size()) + " entries for a shape with " +
                                std::to_string(shape_.num_cells()) + " cells");
    }
    for (int v : entries_)
        if (v <= 0)
            throw PreconditionError("tableau entries must be positive");
    row_offset_.resize(shape_.num_rows() + 1, 0);
    for (int r = 1; r <= shape_.num_rows(); ++r)
        row_offset_[r] = row_offset_[r - 1] + std::max(0, shape_.row_length(r));
}

Tableau::Tableau(SkewShape shape, const std::vector<std::vector<int>>& rows)
    : Tableau(std::move(shape), [&] {
          std::vector<int> flat;
          for (const auto& row : rows)
              flat.insert(flat.end(), row.begin(), row.end());
          return flat;
      }(), 0) {
    if (rows.size() > static_cast<std::size_t>(shape_.num_rows()))
        throw PreconditionError("tableau has more rows than its shape");
    for (int r = 1; r <= shape_.num_rows(); ++r) {
        std::size_t given = static_cast<std::size_t>(r) <= rows.size() ? rows[r - 1].size() : 0;
        if (given != static_cast<std::size_t>(std::max(0, shape_.row_length(r))))
            throw PreconditionError("row " + std::to_string(r) + " of the tableau has the wrong length");
    }
}

Tableau Tableau::from_reading(SkewShape shape, std::vector<int> entries) {
    return Tableau(std::move(shape), std::move(entries), 0);
}

std::size_t Tableau::index_of(Cell c) const noexcept {
    return row_offset_[c.row - 1] + static_cast<std::size_t>(c.col - shape_.first_col(c.row));
}

int Tableau::at(Cell c) const {
    if (!shape_.contains(c))
        throw std::out_of_range("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") is not in the shape");
    return entries_[index_of(c)];
}

std::vector<std::vector<int>> Tableau::rows() const {
    std::vector<std::vector<int>> out(shape_.num_rows());
    for (int r = 1; r <= shape_.num_rows(); ++r)
        out[r - 1].assign(entries_.begin() + row_offset_[r - 1], entries_.begin() + row_offset_[r]);
    return out;
}

bool is_semistandard(const Tableau& t) {
    const auto& s = t.shape();
    for (const Cell c : s.cells()) {
        const int v = t.at(c);
        if (s.contains({c.row, c.col + 1}) && t.at({c.row, c.col + 1}) < v)
            return false;
        if (s.contains({c.row + 1, c.col}) && t.at({c.row + 1, c.col}) <= v)
            return false;
    }
    return true;
}

Composition content_of(const Tableau& t) {
    std::vector<int> mult;
    for (int v : t.entries()) {
        if (static_cast<std::size_t>(v) > mult.size())
            mult.resize(v, 0);
        ++mult[v - 1];
    }
    return Composition(std::move(mult));
}

namespace {

// Row-major backtracking over the cells of a skew shape. Each cell's lower
// bound comes from its left and upper neighbours; a cell with h cells below it
// in its column cannot exceed alphabet - h.
class SsytEnumerator {
public:
    SsytEnumerator(const SkewShape& shape, const Composition& content)
        : remaining_(content.parts().begin(), content.parts().end()) {
        if (shape.num_cells() != content.size()) {
            throw SizeMismatchError("content has size " + std::to_string(content.size()) + " but the shape has " +
                                    std::to_string(shape.num_cells()) + " cells");
        }
        const auto cells = shape.cells();
        const int alphabet = static_cast<int>(remaining_.size());
        std::vector<std::size_t> row_start(shape.num_rows() + 2, 0);
        for (int r = 1; r <= shape.num_rows(); ++r)
            row_start[r + 1] = row_start[r] + std::max(0, shape.row_length(r));
        auto index = [&](Cell c) { return row_start[c.row] + static_cast<std::size_t>(c.col - shape.first_col(c.row)); };
        nodes_.reserve(cells.size());
        for (const Cell c : cells) {
            Node n;
            if (shape.contains({c.row, c.col - 1}))
                n.left = static_cast<long>(index({c.row, c.col - 1}));
            if (shape.contains({c.row - 1, c.col}))
                n.above = static_cast<long>(index({c.row - 1, c.col}));
            int below = 0;
            while (shape.contains({c.row + below + 1, c.col}))
                ++below;
            n.max_value = alphabet - below;
            nodes_.push_back(n);
        }
        filling_.assign(cells.size(), 0);
    }

    template <class Visit>
    void run(Visit&& visit) {
        recurse(0, visit);
    }

private:
    struct Node {
        long left = -1;
        long above = -1;
        int max_value = 0;
    };

    template <class Visit>
    void recurse(std::size_t k, Visit& visit) {
        if (k == nodes_.size()) {
            visit(std::span<const int>(filling_));
            return;
        }
        const Node& n = nodes_[k];
        int lo = 1;
        if (n.left >= 0)
            lo = std::max(lo, filling_[n.left]);
        if (n.above >= 0)
            lo = std::max(lo, filling_[n.above] + 1);
        for (int v = lo; v <= n.max_value; ++v) {
            if (remaining_[v - 1] == 0)
                continue;
            --remaining_[v - 1];
            filling_[k] = v;
            recurse(k + 1, visit);
            ++remaining_[v - 1];
        }
    }

    std::vector<int> remaining_;
    std::vector<Node> nodes_;
    std::vector<int> filling_;
};

} // namespace

void for_each_ssyt(const SkewShape& shape, const Composition& content,
                   const std::function<void(std::span<const int>)>& visit) {
    SsytEnumerator e(shape, content);
    e.run(visit);
}

std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, const Composition& content) {
    std::vector<Tableau> out;
    SsytEnumerator e(shape, content);
    e.run([&](std::span<const int> w) { out.push_back(Tableau::from_reading(shape, {w.begin(), w.end()})); });
    return out;
}

Count count_ssyt(const SkewShape& shape, const Composition& content) {
    unsigned long n = 0;
    SsytEnumerator e(shape, content);
    e.run([&](std::span<const int>) { ++n; });
    return Count(n);
}

std::string render(const Tableau& t) {
    std::ostringstream os;
    const auto rows = t.rows();
    for (int r = 1; r <= t.shape().num_rows(); ++r) {
        bool first = true;
        for (int c = 1; c < t.shape().first_col(r) && c <= t.shape().last_col(r); ++c, first = false)
            os << (first ? "" : " ") << '.';
        for (int v : rows[r - 1]) {
            os << (first ? "" : " ") << v;
            first = false;
        }
        os << '\n';
    }
    return os.str();
}

} // namespace kostka

#include "kostka/class_counting.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "kostka/bounded_counts.hpp"
#include "kostka/errors.hpp"

namespace kostka {

bool operator<(const ClassSignature& a, const ClassSignature& b) {
    auto key = [](const ClassSignature& s) {
        return std::make_tuple(s.shape.outer(), s.shape.inner(), s.index);
    };
    if (key(a) != key(b))
        return key(a) < key(b);
    return a.skeleton < b.skeleton;
}

std::size_t ClassSignature::hash() const noexcept {
    std::size_t h = shape.hash() * 1000003u + static_cast<std::size_t>(index);
    for (const auto& [cell, v] : skeleton) {
        h = h * 1000003u + static_cast<std::size_t>(cell.row);
        h = h * 1000003u + static_cast<std::size_t>(cell.col);
        h = h * 1000003u + static_cast<std::size_t>(v);
    }
    return h;
}

ClassSignature signature_of(const Tableau& t, int i) {
    if (i < 1)
        throw PreconditionError("class index i must be positive");
    if (!is_semistandard(t))
        throw PreconditionError("signature_of needs a semistandard tableau");
    ClassSignature sig;
    sig.shape = t.shape();
    sig.index = i;
    sig.row_counts.assign(sig.shape.num_rows(), 0);

    // column -> available rows in that column
    std::map<int, std::vector<int>> by_column;
    for (const Cell c : sig.shape.cells()) {
        const int v = t.at(c);
        if (v == i || v == i + 1) {
            sig.available.push_back(c);
            by_column[c.col].push_back(c.row);
        } else {
            sig.skeleton.emplace_back(c, v);
        }
    }

    std::vector<int> last_single_col(sig.shape.num_rows() + 1, 0);
    for (const auto& [col, rows] : by_column) {
        if (rows.size() > 2)
            throw std::logic_error("semistandard column holds more than two entries from {i, i+1}");
        if (rows.size() == 2) {
            ++sig.forced_pairs;
            continue;
        }
        const int r = rows.front();
        if (sig.row_counts[r - 1] > 0 && last_single_col[r] != col - 1)
            throw std::logic_error("single available cells of row " + std::to_string(r) + " are not contiguous");
        ++sig.row_counts[r - 1];
        last_single_col[r] = col;
    }
    return sig;
}

Count count_in_class(const ClassSignature& sig, const Composition& target) {
    if (target.size() != sig.shape.num_cells()) {
        throw SizeMismatchError("target content has size " + std::to_string(target.size()) + " but the shape has " +
                                std::to_string(sig.shape.num_cells()) + " cells");
    }
    const int i = sig.index;
    std::vector<int> fixed(target.length(), 0);
    for (const auto& [cell, v] : sig.skeleton) {
        if (static_cast<std::size_t>(v) > target.length())
            return 0;
        ++fixed[v - 1];
    }
    for (std::size_t k = 1; k <= target.length(); ++k) {
        if (static_cast<int>(k) == i || static_cast<int>(k) == i + 1)
            continue;
        if (fixed[k - 1] != target.part(k))
            return 0;
    }
    // Sizes agree, so target_i + target_{i+1} = |available| = 2d + sum(x).
    std::vector<int> x;
    int free_cells = 0;
    for (int xj : sig.row_counts) {
        x.push_back(xj);
        free_cells += xj;
    }
    const long a = static_cast<long>(target.part(i)) - sig.forced_pairs;
    const long twice_a = static_cast<long>(target.part(i)) - target.part(i + 1) + free_cells;
    if (twice_a != 2 * a)
        throw std::logic_error("class count: i-multiplicity disagrees with the half-sum formula");
    return s_count(BoundVector(std::move(x)), a);
}

Composition transfer(const Composition& mu, int i) {
    if (i < 1)
        throw PreconditionError("transfer index i must be positive");
    if (mu.part(i) == 0)
        throw PreconditionError("transfer needs mu_" + std::to_string(i) + " >= 1");
    std::vector<int> nu(mu.parts().begin(), mu.parts().end());
    nu.resize(std::max<std::size_t>(nu.size(), static_cast<std::size_t>(i) + 1), 0);
    --nu[i - 1];
    ++nu[i];
    return Composition(std::move(nu));
}

TransferCounts adjacent_transfer_holds(const SkewShape& shape, const Composition& mu, int i) {
    if (i < 1 || mu.part(i) <= mu.part(i + 1)) {
        std::ostringstream os;
        os << "adjacent transfer needs mu_i > mu_{i+1}; got i=" << i << " for " << mu;
        throw PreconditionError(os.str());
    }
    Composition nu = transfer(mu, i);
    Count before = count_ssyt(shape, mu);
    Count after = count_ssyt(shape, nu);
    return {std::move(nu), std::move(before), std::move(after)};
}

std::string render_skeleton(const ClassSignature& sig) {
    std::ostringstream os;
    const auto& s = sig.shape;
    auto fixed = sig.skeleton.begin();
    for (int r = 1; r <= s.num_rows(); ++r) {
        bool first = true;
        for (int c = 1; c <= s.last_col(r); ++c, first = false) {
            os << (first ? "" : " ");
            if (c < s.first_col(r)) {
                os << '.';
            } else if (fixed != sig.skeleton.end() && fixed->first == Cell{r, c}) {
                os << fixed->second;
                ++fixed;
            } else {
                os << '*';
            }
        }
        os << '\n';
    }
    return os.str();
}

} // namespace kostka

#include "kostka/partition.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "kostka/errors.hpp"

namespace kostka {

namespace {

std::size_t hash_parts(std::span<const int> parts) {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int v : parts)
        h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

std::span<const int> trim_trailing_zeros(std::span<const int> parts) {
    std::size_t len = parts.size();
    while (len > 0 && parts[len - 1] == 0)
        --len;
    return parts.first(len);
}

std::string render(std::span<const int> parts) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < parts.size(); ++k)
        os << (k ? "," : "") << parts[k];
    os << ')';
    return os.str();
}

} // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 0)
            throw PreconditionError("composition part " + std::to_string(k + 1) + " is negative");
        size_ += parts_[k];
    }
}

Composition Composition::normalized() const {
    auto t = trim_trailing_zeros(parts_);
    return Composition(std::vector<int>(t.begin(), t.end()));
}

bool Composition::is_partition() const noexcept {
    auto t = trim_trailing_zeros(parts_);
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (t[k] == 0 || (k + 1 < t.size() && t[k] < t[k + 1]))
            return false;
    }
    return true;
}

bool operator==(const Composition& a, const Composition& b) noexcept {
    auto x = trim_trailing_zeros(a.parts_);
    auto y = trim_trailing_zeros(b.parts_);
    return std::equal(x.begin(), x.end(), y.begin(), y.end());
}

std::size_t Composition::hash() const noexcept { return hash_parts(trim_trailing_zeros(parts_)); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] <= 0)
            throw PreconditionError("partition part " + std::to_string(k + 1) + " is not positive");
        if (k + 1 < parts_.size() && parts_[k] < parts_[k + 1])
            throw PreconditionError("partition parts increase at position " + std::to_string(k + 2));
        size_ += parts_[k];
    }
}

std::size_t Partition::hash() const noexcept { return hash_parts(parts_); }

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << render(p.parts()); }
std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << render(c.parts()); }

std::ostream& operator<<(std::ostream& os, const CoverMove& m) {
    if (m.kind == CoverMove::Kind::AdjacentRow)
        return os << "row-move i=" << m.i;
    return os << "column-move i=" << m.i << " j=" << m.j;
}

bool dominates(std::span<const int> a, std::span<const int> b) {
    long total_a = std::accumulate(a.begin(), a.end(), 0L);
    long total_b = std::accumulate(b.begin(), b.end(), 0L);
    if (total_a != total_b) {
        throw SizeMismatchError("dominance compares compositions of different sizes (" +
                                std::to_string(total_a) + " vs " + std::to_string(total_b) + ")");
    }
    long sa = 0, sb = 0;
    for (std::size_t r = 0; r < std::max(a.size(), b.size()); ++r) {
        sa += r < a.size() ? a[r] : 0;
        sb += r < b.size() ? b[r] : 0;
        if (sa < sb)
            return false;
    }
    return true;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw PreconditionError("partitions_of: n must be non-negative");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    // Classic successor rule for reverse-lex order: find the rightmost part
    // greater than 1, decrement it, and redistribute the remainder greedily.
    std::vector<int> cur{n};
    for (;;) {
        out.emplace_back(cur);
        int ones = 0;
        while (!cur.empty() && cur.back() == 1) {
            cur.pop_back();
            ++ones;
        }
        if (cur.empty())
            break;
        int v = --cur.back();
        int rest = ones + 1;
        while (rest > v) {
            cur.push_back(v);
            rest -= v;
        }
        if (rest > 0)
            cur.push_back(rest);
    }
    return out;
}

std::vector<Composition> compositions_of(int n, std::size_t max_length) {
    if (n < 0)
        throw PreconditionError("compositions_of: n must be non-negative");
    std::vector<Composition> out;
    std::vector<int> prefix;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(prefix);
            return;
        }
        if (prefix.size() == max_length)
            return;
        for (int v = remaining; v >= 0; --v) {
            prefix.push_back(v);
            self(self, remaining - v);
            prefix.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

Partition conjugate(const Partition& p) {
    std::vector<int> t(p.empty() ? 0 : p.part(1), 0);
    for (int row : p.parts())
        for (int c = 0; c < row; ++c)
            ++t[c];
    return Partition(std::move(t));
}

Partition apply_move(const Partition& mu, const CoverMove& move) {
    if (move.i < 1 || move.j <= move.i)
        throw PreconditionError("cover move needs 1 <= i < j");
    std::vector<int> parts(mu.parts().begin(), mu.parts().end());
    if (parts.size() < static_cast<std::size_t>(move.j))
        parts.resize(move.j, 0);
    if (parts[move.i - 1] == 0)
        throw PreconditionError("cover move takes a box from empty row " + std::to_string(move.i));
    --parts[move.i - 1];
    ++parts[move.j - 1];
    for (std::size_t k = 0; k + 1 < parts.size(); ++k) {
        if (parts[k] < parts[k + 1]) {
            std::ostringstream os;
            os << "moving a box from row " << move.i << " to row " << move.j << " of " << mu
               << " does not give a partition";
            throw PreconditionError(os.str());
        }
    }
    return Partition(std::move(parts));
}

std::vector<Cover> covers(const Partition& mu) {
    std::vector<Cover> out;
    const int len = static_cast<int>(mu.length());
    for (int i = 1; i <= len; ++i) {
        const int top = mu.part(i);
        if (top >= mu.part(i + 1) + 2) {
            CoverMove m{CoverMove::Kind::AdjacentRow, i, i + 1};
            out.push_back({m, apply_move(mu, m)});
        }
        // Column move: rows i+1..j-1 equal top-1, row j equals top-2, j >= i+2.
        int j = i + 1;
        while (j <= len && mu.part(j) == top - 1)
            ++j;
        if (j >= i + 2 && mu.part(j) == top - 2) {
            CoverMove m{CoverMove::Kind::AdjacentColumn, i, j};
            out.push_back({m, apply_move(mu, m)});
        }
    }
    std::sort(out.begin(), out.end(), [](const Cover& a, const Cover& b) { return a.nu > b.nu; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Cover& a, const Cover& b) { return a.nu == b.nu; }),
              out.end());
    return out;
}

std::vector<Partition> cover_chain(const Partition& mu, const Partition& nu) {
    if (!dominates(mu, nu)) {
        std::ostringstream os;
        os << mu << " does not dominate " << nu;
        throw NotComparableError(os.str());
    }
    std::vector<Partition> chain{mu};
    while (!(chain.back() == nu)) {
        const auto next = covers(chain.back());
        auto it = std::find_if(next.begin(), next.end(),
                               [&](const Cover& c) { return dominates(c.nu, nu); });
        if (it == next.end())
            throw std::logic_error("cover_chain: no cover of the current partition dominates the target");
        chain.push_back(it->nu);
    }
    return chain;
}

std::vector<Composition> adjacent_transfer_chain(const Partition& mu, const CoverMove& move) {
    if (move.kind != CoverMove::Kind::AdjacentColumn)
        throw PreconditionError("adjacent_transfer_chain needs a column move; row moves have no intermediates");
    const auto valid = covers(mu);
    if (std::none_of(valid.begin(), valid.end(), [&](const Cover& c) { return c.move == move; })) {
        std::ostringstream os;
        os << move << " is not a cover move of " << mu;
        throw PreconditionError(os.str());
    }
    std::vector<Composition> chain;
    for (int k = move.i + 1; k < move.j; ++k) {
        std::vector<int> xi(mu.parts().begin(), mu.parts().end());
        xi.resize(std::max<std::size_t>(xi.size(), move.j), 0);
        --xi[move.i - 1];
        ++xi[k - 1];
        chain.emplace_back(std::move(xi));
    }
    return chain;
}

bool is_adjacent_transfer(const Composition& from, const Composition& to) {
    if (from.size() != to.size())
        return false;
    const std::size_t len = std::max(from.length(), to.length()) + 1;
    for (std::size_t r = 1; r < len; ++r) {
        if (from.part(r) <= from.part(r + 1))
            continue;
        bool match = true;
        for (std::size_t k = 1; k <= len && match; ++k) {
            int expected = from.part(k) - (k == r) + (k == r + 1);
            match = to.part(k) == expected;
        }
        if (match)
            return true;
    }
    return false;
}

} // namespace kostka

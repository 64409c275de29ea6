#include "kostka/oracles.hpp"

#include <deque>
#include <map>

namespace kostka::oracle {

namespace {

bool strictly_dominates(const Partition& a, const Partition& b) { return !(a == b) && dominates(a, b); }

} // namespace

std::vector<Partition> hasse_covers(const Partition& mu) {
    const auto all = partitions_of(mu.size());
    std::vector<Partition> out;
    for (const auto& nu : all) {
        if (!strictly_dominates(mu, nu))
            continue;
        bool saturated = true;
        for (const auto& xi : all) {
            if (strictly_dominates(mu, xi) && strictly_dominates(xi, nu)) {
                saturated = false;
                break;
            }
        }
        if (saturated)
            out.push_back(nu);
    }
    return out;
}

int hasse_distance(const Partition& mu, const Partition& nu) {
    if (mu.size() != nu.size() || !dominates(mu, nu))
        return -1;
    std::map<Partition, int> dist{{mu, 0}};
    std::deque<Partition> queue{mu};
    while (!queue.empty()) {
        Partition p = queue.front();
        queue.pop_front();
        if (p == nu)
            return dist[p];
        for (const auto& q : hasse_covers(p)) {
            if (dominates(q, nu) && dist.emplace(q, dist[p] + 1).second)
                queue.push_back(q);
        }
    }
    return -1;
}

Count bounded_solutions(const BoundVector& x, long a) {
    const auto b = x.bounds();
    std::vector<int> y(b.size(), 0);
    unsigned long hits = 0;
    for (;;) {
        long sum = 0;
        for (int v : y)
            sum += v;
        if (sum == a)
            ++hits;
        std::size_t k = 0;
        while (k < y.size() && y[k] == b[k])
            y[k++] = 0;
        if (k == y.size())
            break;
        ++y[k];
    }
    return Count(hits);
}

} // namespace kostka::oracle

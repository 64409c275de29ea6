#include "kostka/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <json.hpp>

#include "kostka/bounded_counts.hpp"
#include "kostka/class_counting.hpp"
#include "kostka/kostka_engine.hpp"
#include "kostka/oracles.hpp"
#include "parallel.hpp"

namespace kostka {

namespace {

struct Partial {
    std::size_t checked = 0;
    std::vector<Violation> violations;
};

template <class... Args>
std::string describe(const Args&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}

// Runs body over [0, count) in parallel, each index filling its own Partial,
// then merges them in index order.
template <class Body>
Report run_sharded(std::string name, std::size_t count, unsigned parallelism, Body&& body) {
    std::vector<Partial> parts(count);
    detail::parallel_for(count, parallelism, [&](std::size_t k) { body(k, parts[k]); });
    Report r{std::move(name), 0, {}};
    for (auto& p : parts) {
        r.checked += p.checked;
        r.violations.insert(r.violations.end(), std::make_move_iterator(p.violations.begin()),
                            std::make_move_iterator(p.violations.end()));
    }
    return r;
}

KostkaFn shared_engine_fn() {
    auto engine = std::make_shared<KostkaEngine>();
    return [engine](const SkewShape& s, const Composition& c) { return engine->kostka(s, c); };
}

std::vector<Partition> partitions_in_box(int rows, int width) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int cap) -> void {
        out.emplace_back(cur);
        if (static_cast<int>(cur.size()) == rows)
            return;
        for (int v = 1; v <= cap; ++v) {
            cur.push_back(v);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, width);
    return out;
}

std::vector<Composition> distinct_permutations(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end());
    std::vector<Composition> out;
    do {
        out.emplace_back(parts);
    } while (std::next_permutation(parts.begin(), parts.end()));
    return out;
}

} // namespace

std::vector<SkewShape> straight_shapes(int max_cells) {
    std::vector<SkewShape> out;
    for (int m = 0; m <= max_cells; ++m)
        for (auto& p : partitions_of(m))
            out.emplace_back(std::move(p));
    return out;
}

std::vector<SkewShape> skew_shapes(int max_cells, int max_rows) {
    std::vector<SkewShape> out;
    for (const auto& outer : partitions_in_box(max_rows, max_cells)) {
        if (outer.empty())
            continue;
        for (const auto& inner : partitions_in_box(static_cast<int>(outer.length()), max_cells)) {
            if (inner.empty())
                continue;
            bool contained = true;
            for (std::size_t r = 1; r <= inner.length(); ++r)
                contained = contained && inner.part(r) <= outer.part(r);
            if (!contained)
                continue;
            const int cells = outer.size() - inner.size();
            if (cells < 1 || cells > max_cells)
                continue;
            // translation canonical form: first row and first column occupied
            if (inner.part(1) == outer.part(1) || inner.length() == outer.length())
                continue;
            out.emplace_back(outer, inner);
        }
    }
    return out;
}

Report verify_dominance_support(int n, unsigned parallelism) { return verify_dominance_support(n, shared_engine_fn(), parallelism); }

Report verify_dominance_support(int n, const KostkaFn& k, unsigned parallelism) {
    std::vector<Partition> lambdas;
    for (int m = 0; m <= n; ++m)
        for (auto& p : partitions_of(m))
            lambdas.push_back(std::move(p));
    return run_sharded("dominance support: K > 0 iff dominance", lambdas.size(), parallelism, [&](std::size_t idx, Partial& out) {
        const Partition& lambda = lambdas[idx];
        const SkewShape shape(lambda);
        for (const auto& mu : partitions_of(lambda.size())) {
            ++out.checked;
            const bool positive = k(shape, mu.as_composition()) > 0;
            const bool dom = dominates(lambda, mu);
            if (positive != dom) {
                out.violations.push_back(
                    {"support", describe("lambda=", lambda, " mu=", mu, " K>0=", positive, " dominates=", dom)});
            }
        }
    });
}

Report verify_monotonicity(int n, bool include_skew, unsigned parallelism) {
    return verify_monotonicity(n, include_skew, shared_engine_fn(), parallelism);
}

Report verify_monotonicity(int n, bool include_skew, const KostkaFn& k, unsigned parallelism) {
    auto shapes = straight_shapes(n);
    if (include_skew) {
        auto skew = skew_shapes(n, 4);
        shapes.insert(shapes.end(), skew.begin(), skew.end());
    }
    std::string name = include_skew ? "monotonicity: K(mu) <= K(nu) for mu >= nu (straight + skew)"
                                    : "monotonicity: K(mu) <= K(nu) for mu >= nu (straight)";
    return run_sharded(std::move(name), shapes.size(), parallelism, [&](std::size_t idx, Partial& out) {
        const SkewShape& shape = shapes[idx];
        const auto parts = partitions_of(shape.num_cells());
        std::vector<Count> values;
        values.reserve(parts.size());
        for (const auto& p : parts)
            values.push_back(k(shape, p.as_composition()));
        for (std::size_t a = 0; a < parts.size(); ++a) {
            for (std::size_t b = 0; b < parts.size(); ++b) {
                if (!dominates(parts[a], parts[b]))
                    continue;
                ++out.checked;
                if (values[a] > values[b]) {
                    out.violations.push_back({"monotonicity", describe("shape=", shape, " mu=", parts[a], " nu=", parts[b],
                                                                       " K(mu)=", to_decimal(values[a]),
                                                                       " K(nu)=", to_decimal(values[b]))});
                }
            }
        }
    });
}

Report verify_bounded_counts(int max_length, int max_bound) {
    Report r{"bounded counts: monotonicity, symmetry, split, normalization, brute force", 0, {}};
    auto fail = [&](const char* check, const BoundVector& x, const std::string& detail) {
        std::ostringstream os;
        os << "x=" << Composition(std::vector<int>(x.bounds().begin(), x.bounds().end())) << ' ' << detail;
        r.violations.push_back({check, os.str()});
    };
    std::vector<int> x;
    auto visit = [&](const BoundVector& bv) {
        const int m = bv.total();
        std::map<long, Count> s;
        for (long a = -1; a <= m + 1; ++a)
            s[a] = s_count(bv, a);

        Count sum = 0, product = 1;
        for (long a = 0; a <= m; ++a)
            sum += s[a];
        for (int b : bv.bounds())
            product *= b + 1;
        ++r.checked;
        if (sum != product)
            fail("normalization", bv, describe("sum=", to_decimal(sum), " product=", to_decimal(product)));

        for (long a = -1; a <= m + 1; ++a) {
            ++r.checked;
            if (s[a] != oracle::bounded_solutions(bv, a))
                fail("brute-force", bv, describe("a=", a, " dp=", to_decimal(s[a])));
            ++r.checked;
            if (s[a] != s_count(bv, m - a))
                fail("symmetry", bv, describe("a=", a));
            if (bv.length() >= 1 && bv.bounds()[0] >= 1) {
                ++r.checked;
                const auto split = s_split(bv, a);
                if (split.top + split.rest != s[a])
                    fail("split", bv, describe("a=", a, " T=", to_decimal(split.top), " U=", to_decimal(split.rest)));
            }
            for (long b = -1; b <= m + 1; ++b) {
                // |a - m/2| >= |b - m/2|, scaled by 2 to stay integral
                if (std::labs(2 * a - m) < std::labs(2 * b - m))
                    continue;
                ++r.checked;
                if (s[a] > s[b])
                    fail("monotonicity", bv, describe("a=", a, " b=", b, " S(a)=", to_decimal(s[a]),
                                                      " S(b)=", to_decimal(s[b])));
            }
        }
    };
    auto rec = [&](auto&& self) -> void {
        visit(BoundVector(x));
        if (static_cast<int>(x.size()) == max_length)
            return;
        for (int v = 0; v <= max_bound; ++v) {
            x.push_back(v);
            self(self);
            x.pop_back();
        }
    };
    rec(rec);
    return r;
}

Report verify_class_counting(int max_cells, unsigned parallelism) {
    auto shapes = straight_shapes(max_cells);
    auto skew = skew_shapes(max_cells, 4);
    shapes.insert(shapes.end(), skew.begin(), skew.end());
    return run_sharded(
        "class counting: adjacent transfer, per class and in total", shapes.size(), parallelism,
        [&](std::size_t idx, Partial& out) {
            const SkewShape& shape = shapes[idx];
            const int m = shape.num_cells();
            for (const auto& mu : compositions_of(m, static_cast<std::size_t>(std::max(m, 1)))) {
                for (int i = 1; i <= static_cast<int>(mu.length()); ++i) {
                    if (mu.part(i) <= mu.part(i + 1))
                        continue;
                    const auto totals = adjacent_transfer_holds(shape, mu, i);
                    const auto& nu = totals.nu;
                    ++out.checked;
                    if (totals.before > totals.after) {
                        out.violations.push_back({"transfer total", describe("shape=", shape, " mu=", mu, " i=", i,
                                                                             " K(mu)=", to_decimal(totals.before),
                                                                             " K(nu)=", to_decimal(totals.after))});
                    }

                    // class -> (direct count for mu, direct count for nu)
                    std::map<ClassSignature, std::pair<long, long>> classes;
                    auto collect = [&](const Composition& content, bool is_mu) {
                        for (const auto& t : enumerate_ssyt(shape, content)) {
                            auto sig = signature_of(t, i);
                            // two available cells in a column read i over i+1
                            for (std::size_t a = 0; a + 1 < sig.available.size(); ++a) {
                                for (std::size_t b = a + 1; b < sig.available.size(); ++b) {
                                    const Cell x = sig.available[a], y = sig.available[b];
                                    if (x.col == y.col && (t.at(x) != i || t.at(y) != i + 1)) {
                                        out.violations.push_back(
                                            {"forced column", describe("shape=", shape, " i=", i, " tableau=\n", render(t))});
                                    }
                                }
                            }
                            auto& slot = classes[std::move(sig)];
                            (is_mu ? slot.first : slot.second) += 1;
                        }
                    };
                    collect(mu, true);
                    collect(nu, false);

                    Count sum_mu = 0, sum_nu = 0;
                    for (const auto& [sig, direct] : classes) {
                        const Count cm = count_in_class(sig, mu);
                        const Count cn = count_in_class(sig, nu);
                        sum_mu += cm;
                        sum_nu += cn;
                        out.checked += 2;
                        if (cm != direct.first || cn != direct.second) {
                            out.violations.push_back(
                                {"class count", describe("shape=", shape, " mu=", mu, " i=", i, " formula=(",
                                                         to_decimal(cm), ",", to_decimal(cn), ") direct=(", direct.first,
                                                         ",", direct.second, ") skeleton=\n", render_skeleton(sig))});
                        }
                        if (cm > cn) {
                            out.violations.push_back(
                                {"class transfer", describe("shape=", shape, " mu=", mu, " i=", i, " K_class(mu)=",
                                                            to_decimal(cm), " K_class(nu)=", to_decimal(cn))});
                        }
                    }
                    ++out.checked;
                    if (sum_mu != totals.before || sum_nu != totals.after) {
                        out.violations.push_back({"class sum", describe("shape=", shape, " mu=", mu, " i=", i)});
                    }
                }
            }
        });
}

Report verify_covers(int max_n) {
    Report r{"covers: agreement with brute-force Hasse diagram", 0, {}};
    for (int n = 0; n <= max_n; ++n) {
        for (const auto& mu : partitions_of(n)) {
            ++r.checked;
            std::vector<Partition> fast;
            for (const auto& c : covers(mu)) {
                fast.push_back(c.nu);
                if (!(apply_move(mu, c.move) == c.nu))
                    r.violations.push_back({"cover move", describe("mu=", mu, " move=", c.move)});
            }
            const auto slow = oracle::hasse_covers(mu);
            if (fast != slow) {
                std::ostringstream os;
                os << "mu=" << mu << " covers:";
                for (const auto& p : fast)
                    os << ' ' << p;
                os << " hasse:";
                for (const auto& p : slow)
                    os << ' ' << p;
                r.violations.push_back({"covers", os.str()});
            }
        }
    }
    return r;
}

Report verify_transfer_chains(int max_n, unsigned parallelism) {
    return verify_transfer_chains(max_n, shared_engine_fn(), parallelism);
}

Report verify_transfer_chains(int max_n, const KostkaFn& k, unsigned parallelism) {
    std::vector<Partition> sources;
    for (int n = 0; n <= max_n; ++n)
        for (auto& p : partitions_of(n))
            sources.push_back(std::move(p));
    return run_sharded("transfer chains: adjacent steps and weakly increasing K", sources.size(), parallelism,
                       [&](std::size_t idx, Partial& out) {
                           const Partition& mu = sources[idx];
                           const auto lambdas = partitions_of(mu.size());
                           for (const auto& cover : covers(mu)) {
                               std::vector<Composition> chain{mu.as_composition()};
                               if (cover.move.kind == CoverMove::Kind::AdjacentColumn) {
                                   auto mid = adjacent_transfer_chain(mu, cover.move);
                                   ++out.checked;
                                   if (mid.size() != static_cast<std::size_t>(cover.move.j - cover.move.i - 1)) {
                                       out.violations.push_back(
                                           {"chain length", describe("mu=", mu, " move=", cover.move)});
                                   }
                                   chain.insert(chain.end(), mid.begin(), mid.end());
                               }
                               chain.push_back(cover.nu.as_composition());
                               for (std::size_t s = 0; s + 1 < chain.size(); ++s) {
                                   ++out.checked;
                                   if (!is_adjacent_transfer(chain[s], chain[s + 1])) {
                                       out.violations.push_back({"chain step", describe("mu=", mu, " move=", cover.move,
                                                                                        " step ", chain[s], " -> ",
                                                                                        chain[s + 1])});
                                   }
                               }
                               for (const auto& lambda : lambdas) {
                                   const SkewShape shape(lambda);
                                   Count prev = k(shape, chain.front());
                                   for (std::size_t s = 1; s < chain.size(); ++s) {
                                       Count cur = k(shape, chain[s]);
                                       ++out.checked;
                                       if (prev > cur) {
                                           out.violations.push_back(
                                               {"chain monotonicity",
                                                describe("lambda=", lambda, " mu=", mu, " move=", cover.move, " at ",
                                                         chain[s - 1], "->", chain[s], " K ", to_decimal(prev), " > ",
                                                         to_decimal(cur))});
                                       }
                                       prev = std::move(cur);
                                   }
                               }
                           }
                       });
}

Report verify_oracle_equivalence(int max_cells, unsigned parallelism) {
    auto shapes = straight_shapes(max_cells);
    const std::size_t straight_count = shapes.size();
    auto skew = skew_shapes(max_cells, 4);
    shapes.insert(shapes.end(), skew.begin(), skew.end());
    KostkaEngine engine;
    return run_sharded("oracle equivalence: DP equals enumeration", shapes.size(), parallelism,
                       [&](std::size_t idx, Partial& out) {
                           const SkewShape& shape = shapes[idx];
                           const int m = shape.num_cells();
                           // straight shapes also see contents with interior zeros
                           const bool straight = idx < straight_count;
                           for (const auto& content : compositions_of(m, static_cast<std::size_t>(std::max(m, 1)))) {
                               const auto parts = content.parts();
                               if (!straight && std::find(parts.begin(), parts.end(), 0) != parts.end())
                                   continue;
                               ++out.checked;
                               const Count dp = engine.kostka(shape, content);
                               const Count brute = count_ssyt(shape, content);
                               if (dp != brute) {
                                   out.violations.push_back({"oracle", describe("shape=", shape, " content=", content,
                                                                                " dp=", to_decimal(dp),
                                                                                " enumeration=", to_decimal(brute))});
                               }
                           }
                       });
}

Report verify_permutation_invariance(int max_cells, unsigned parallelism) {
    auto shapes = straight_shapes(max_cells);
    auto skew = skew_shapes(max_cells, 4);
    shapes.insert(shapes.end(), skew.begin(), skew.end());
    KostkaEngine engine;
    return run_sharded("permutation invariance of the content", shapes.size(), parallelism,
                       [&](std::size_t idx, Partial& out) {
                           const SkewShape& shape = shapes[idx];
                           for (const auto& lambda : partitions_of(shape.num_cells())) {
                               std::vector<int> padded(lambda.parts().begin(), lambda.parts().end());
                               padded.push_back(0);
                               const Count base = engine.kostka(shape, lambda.as_composition());
                               for (const auto& perm : distinct_permutations(padded)) {
                                   ++out.checked;
                                   const Count v = engine.kostka(shape, perm);
                                   if (v != base) {
                                       out.violations.push_back(
                                           {"permutation", describe("shape=", shape, " content=", perm, " K=",
                                                                    to_decimal(v), " sorted K=", to_decimal(base))});
                                   }
                               }
                           }
                       });
}

std::vector<Report> verify_all(int max_n, unsigned parallelism) {
    std::vector<Report> out;
    out.push_back(verify_dominance_support(max_n, parallelism));
    out.push_back(verify_monotonicity(max_n, true, parallelism));
    out.push_back(verify_bounded_counts());
    out.push_back(verify_class_counting(max_n, parallelism));
    out.push_back(verify_covers(max_n));
    out.push_back(verify_transfer_chains(max_n, parallelism));
    return out;
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << (r.ok() ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.checked << " checks, " << r.violations.size()
       << " violations)\n";
    for (const auto& v : r.violations)
        os << "    [" << v.check << "] " << v.detail << '\n';
    return os.str();
}

std::string reports_to_text(const std::vector<Report>& reports) {
    std::string out;
    std::size_t total = 0;
    for (const auto& r : reports) {
        out += to_text(r);
        total += r.violations.size();
    }
    out += "total violations: " + std::to_string(total) + "\n";
    return out;
}

std::string reports_to_json(const std::vector<Report>& reports) {
    nlohmann::json suites = nlohmann::json::array();
    nlohmann::json all = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json violations = nlohmann::json::array();
        for (const auto& v : r.violations) {
            nlohmann::json item{{"suite", r.name}, {"check", v.check}, {"detail", v.detail}};
            violations.push_back({{"check", v.check}, {"detail", v.detail}});
            all.push_back(std::move(item));
        }
        suites.push_back({{"name", r.name}, {"checked", r.checked}, {"violations", std::move(violations)}});
    }
    nlohmann::json doc{{"suites", std::move(suites)}, {"violations", std::move(all)}};
    return doc.dump(2) + "\n";
}

} // namespace kostka

// Copyright 2026 The Pentagram Atlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "pentagram/error.hpp"
#include "pentagram/pauli.hpp"
#include "pentagram/polar_space.hpp"

namespace pentagram {

inline constexpr std::size_t kContextsPerPentagram = 5;
inline constexpr std::size_t kPointsPerPentagram = 10;

/// Five contexts pairwise meeting in ten distinct points, with an odd number
/// of negative contexts.
struct Pentagram {
    std::array<Context, 5> contexts;
    std::array<Observable, 10> points;
    int negative_context_count = 0;

    PointMask mask() const {
        return mask_of(points);
    }

    bool has_context(const Context &c) const {
        return std::find(contexts.begin(), contexts.end(), c) != contexts.end();
    }

    int shared_contexts(const Pentagram &other) const {
        int n = 0;
        for (const Context &c : contexts) {
            n += other.has_context(c) ? 1 : 0;
        }
        return n;
    }

    auto operator<=>(const Pentagram &other) const {
        return contexts <=> other.contexts;
    }
    bool operator==(const Pentagram &other) const {
        return contexts == other.contexts;
    }
};

/// All 945 contexts, ascending. Every context is a 4-set {a, b, c, a+b+c} of
/// pairwise commuting points; each is generated once from its three smallest
/// points.
inline std::vector<Context> enumerate_contexts() {
    std::vector<Context> out;
    const auto pts = all_observables();
    for (Observable a : pts) {
        for (Observable b : pts) {
            if (b <= a || !commute(a, b)) {
                continue;
            }
            for (Observable c : pts) {
                if (c <= b || !commute(a, c) || !commute(b, c)) {
                    continue;
                }
                const int d = a.id() ^ b.id() ^ c.id();
                if (d <= c.id()) {
                    continue;  // d == 0 (collinear) or already generated from a smaller triple
                }
                const Observable od = Observable::from_id(d);
                if (commute(a, od) && commute(b, od) && commute(c, od)) {
                    out.push_back(make_context({a, b, c, od}));
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Contexts as nodes; an edge joins two contexts sharing exactly one point.
class ContextGraph {
   public:
    static constexpr std::size_t kWordBits = 64;

    explicit ContextGraph(std::vector<Context> contexts) : contexts_(std::move(contexts)) {
        words_ = (contexts_.size() + kWordBits - 1) / kWordBits;
        masks_.reserve(contexts_.size());
        for (const Context &c : contexts_) {
            masks_.push_back(c.mask());
        }
        adjacency_.assign(contexts_.size() * words_, 0);
        for (std::size_t i = 0; i < contexts_.size(); ++i) {
            for (std::size_t j = 0; j < contexts_.size(); ++j) {
                if (i != j && meet_size(i, j) == 1) {
                    adjacency_[i * words_ + j / kWordBits] |= std::uint64_t{1} << (j % kWordBits);
                }
            }
        }
    }

    std::size_t size() const {
        return contexts_.size();
    }
    std::size_t words() const {
        return words_;
    }
    const std::vector<Context> &contexts() const {
        return contexts_;
    }
    const Context &context(std::size_t i) const {
        return contexts_[i];
    }
    PointMask mask(std::size_t i) const {
        return masks_[i];
    }

    int meet_size(std::size_t i, std::size_t j) const {
        return std::popcount(masks_[i] & masks_[j]);
    }

    bool adjacent(std::size_t i, std::size_t j) const {
        return (row(i)[j / kWordBits] >> (j % kWordBits)) & 1U;
    }

    std::span<const std::uint64_t> row(std::size_t i) const {
        return {adjacency_.data() + i * words_, words_};
    }

    std::size_t degree(std::size_t i) const {
        std::size_t d = 0;
        for (std::uint64_t w : row(i)) {
            d += static_cast<std::size_t>(std::popcount(w));
        }
        return d;
    }

    std::optional<std::size_t> index_of(const Context &c) const {
        auto it = std::lower_bound(contexts_.begin(), contexts_.end(), c);
        if (it == contexts_.end() || *it != c) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(it - contexts_.begin());
    }

   private:
    std::vector<Context> contexts_;
    std::vector<PointMask> masks_;
    std::vector<std::uint64_t> adjacency_;
    std::size_t words_ = 0;
};

namespace detail {

inline int count_negative(std::span<const Context> contexts) {
    return static_cast<int>(
        std::count_if(contexts.begin(), contexts.end(), [](const Context &c) { return c.sign == Sign::Negative; }));
}

inline Pentagram assemble(std::array<Context, 5> contexts) {
    std::sort(contexts.begin(), contexts.end());
    Pentagram p;
    p.contexts = contexts;
    PointMask m = 0;
    for (const Context &c : contexts) {
        m |= c.mask();
    }
    std::size_t k = 0;
    while (m != 0 && k < p.points.size()) {
        const int id = std::countr_zero(m);
        p.points[k++] = Observable::from_id(id);
        m &= m - 1;
    }
    p.negative_context_count = count_negative(contexts);
    return p;
}

}  // namespace detail

/// Checks every pentagram invariant and returns the canonical pentagram.
inline Pentagram validate_pentagram(std::array<Context, 5> contexts) {
    std::sort(contexts.begin(), contexts.end());
    PointMask meets = 0;
    for (std::size_t i = 0; i < contexts.size(); ++i) {
        for (std::size_t j = i + 1; j < contexts.size(); ++j) {
            const PointMask meet = contexts[i].mask() & contexts[j].mask();
            const int n = std::popcount(meet);
            if (n != 1) {
                throw Error(ErrorCode::BadIntersection, "contexts {" + contexts[i].str() + "} and {" + contexts[j].str() +
                                                            "} share " + std::to_string(n) + " points, expected 1");
            }
            if (meets & meet) {
                throw Error(ErrorCode::RepeatedMeetPoint,
                            "point " + Observable::from_id(std::countr_zero(meet)).label() + " is shared by more than two contexts");
            }
            meets |= meet;
        }
    }
    Pentagram p = detail::assemble(contexts);
    if (p.negative_context_count % 2 == 0) {
        throw Error(ErrorCode::EvenParity,
                    "configuration has " + std::to_string(p.negative_context_count) + " negative contexts (not magic)");
    }
    return p;
}

inline Pentagram validate_pentagram(std::span<const Context> contexts) {
    if (contexts.size() != kContextsPerPentagram) {
        throw Error(ErrorCode::BadIntersection, "a pentagram has exactly 5 contexts, got " + std::to_string(contexts.size()));
    }
    return validate_pentagram(std::array<Context, 5>{contexts[0], contexts[1], contexts[2], contexts[3], contexts[4]});
}

namespace detail {

// Depth-first extension from one root context. Candidates are kept as a
// bitset over context indices: adjacent to everything chosen so far and with
// index above the last one chosen, so every 5-clique is produced once.
class CliqueSearch {
   public:
    CliqueSearch(const ContextGraph &graph, std::vector<Pentagram> &found, std::vector<Pentagram> &even)
        : graph_(graph), found_(found), even_(even) {
    }

    void run_from(std::size_t root) {
        std::vector<std::uint64_t> candidates(graph_.row(root).begin(), graph_.row(root).end());
        clear_up_to(candidates, root);
        chosen_[0] = root;
        extend(1, candidates, 0);
    }

   private:
    static void clear_up_to(std::vector<std::uint64_t> &bits, std::size_t index) {
        const std::size_t word = index / ContextGraph::kWordBits;
        for (std::size_t w = 0; w < word; ++w) {
            bits[w] = 0;
        }
        const std::size_t bit = index % ContextGraph::kWordBits;
        bits[word] &= bit == 63 ? 0 : ~((std::uint64_t{2} << bit) - 1);
    }

    void extend(std::size_t depth, const std::vector<std::uint64_t> &candidates, PointMask meets) {
        if (depth == kContextsPerPentagram) {
            record();
            return;
        }
        std::vector<std::uint64_t> next(candidates.size());
        for (std::size_t w = 0; w < candidates.size(); ++w) {
            std::uint64_t word = candidates[w];
            while (word != 0) {
                const std::size_t j = w * ContextGraph::kWordBits + static_cast<std::size_t>(std::countr_zero(word));
                word &= word - 1;
                // Meet points with the chosen contexts must be new and pairwise distinct.
                PointMask new_meets = 0;
                bool ok = true;
                for (std::size_t d = 0; d < depth && ok; ++d) {
                    const PointMask meet = graph_.mask(chosen_[d]) & graph_.mask(j);
                    ok = ((meets | new_meets) & meet) == 0;
                    new_meets |= meet;
                }
                if (!ok) {
                    continue;
                }
                chosen_[depth] = j;
                const auto row = graph_.row(j);
                for (std::size_t v = 0; v < next.size(); ++v) {
                    next[v] = candidates[v] & row[v];
                }
                clear_up_to(next, j);
                extend(depth + 1, next, meets | new_meets);
            }
        }
    }

    void record() {
        std::array<Context, 5> cs{graph_.context(chosen_[0]), graph_.context(chosen_[1]), graph_.context(chosen_[2]),
                                  graph_.context(chosen_[3]), graph_.context(chosen_[4])};
        Pentagram p = assemble(cs);
        (p.negative_context_count % 2 == 1 ? found_ : even_).push_back(p);
    }

    const ContextGraph &graph_;
    std::vector<Pentagram> &found_;
    std::vector<Pentagram> &even_;
    std::array<std::size_t, 5> chosen_{};
};

}  // namespace detail

struct EnumerationOptions {
    /// Worker count; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Every five-context configuration of the graph, split by parity of the
/// negative-context count. Both lists are canonically sorted.
struct ConfigurationSearch {
    std::vector<Pentagram> odd;
    std::vector<Pentagram> even;
};

/// Exhaustive 5-clique search over the context graph with the distinct-meet
/// condition, partitioned by root context across worker threads. The result
/// is identical for every thread count.
inline ConfigurationSearch search_configurations(const ContextGraph &graph, EnumerationOptions options = {}) {
    unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(graph.size(), 1)));

    ConfigurationSearch out;
    std::mutex merge;
    std::atomic<std::size_t> next_root{0};

    auto worker = [&] {
        std::vector<Pentagram> local_odd;
        std::vector<Pentagram> local_even;
        detail::CliqueSearch search(graph, local_odd, local_even);
        for (std::size_t root = next_root++; root < graph.size(); root = next_root++) {
            search.run_from(root);
        }
        std::lock_guard lock(merge);
        out.odd.insert(out.odd.end(), local_odd.begin(), local_odd.end());
        out.even.insert(out.even.end(), local_even.begin(), local_even.end());
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
    }
    std::sort(out.odd.begin(), out.odd.end());
    std::sort(out.even.begin(), out.even.end());
    return out;
}

/// Every pentagram of W(5,2), canonically sorted.
///
/// The search does not filter on parity; a configuration with an even number
/// of negative contexts raises EvenParityConfigurationFound.
inline std::vector<Pentagram> enumerate_pentagrams(const ContextGraph &graph, EnumerationOptions options = {}) {
    ConfigurationSearch found = search_configurations(graph, options);
    if (!found.even.empty()) {
        throw Error(ErrorCode::EvenParityConfigurationFound,
                    std::to_string(found.even.size()) +
                        " five-context configurations with an even number of negative contexts, first: {" +
                        found.even.front().contexts[0].str() + "} ...");
    }
    return std::move(found.odd);
}

inline std::vector<Pentagram> enumerate_pentagrams(EnumerationOptions options = {}) {
    return enumerate_pentagrams(ContextGraph(enumerate_contexts()), options);
}

/// Pentagrams all of whose ten points are symmetric observables.
inline std::vector<Pentagram> pentagrams_on_quadric(std::span<const Pentagram> all) {
    std::vector<Pentagram> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const Pentagram &p) { return on_quadric(p.mask()); });
    return out;
}

}  // namespace pentagram

// Explicitly enumerated small permutation groups (closure, membership,
// transitivity) and the subgroup-chain computation used for generator
// pruning bounds.  Everything here enumerates: no stabilizer chains, the
// groups involved never exceed ~1100 elements.
#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

template <int N>
class GroupTable {
  public:
    GroupTable() = default;

    // BFS closure of the generating set under composition.
    static GroupTable close(std::vector<Perm<N>> gens) {
        GroupTable g;
        g.gens_ = gens;
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Perm<N>> all{Perm<N>::identity()};
        std::vector<Perm<N>> frontier = all;
        while (!frontier.empty()) {
            std::vector<Perm<N>> next;
            for (const auto& e : frontier)
                for (const auto& h : gens) {
                    Perm<N> f = e * h;
                    if (!std::binary_search(all.begin(), all.end(), f)) next.push_back(f);
                }
            std::sort(next.begin(), next.end());
            next.erase(std::unique(next.begin(), next.end()), next.end());
            std::vector<Perm<N>> merged;
            merged.reserve(all.size() + next.size());
            std::set_union(all.begin(), all.end(), next.begin(), next.end(),
                           std::back_inserter(merged));
            all.swap(merged);
            frontier.swap(next);
        }
        g.elems_ = std::move(all);
        return g;
    }

    size_t order() const { return elems_.size(); }

    bool contains(const Perm<N>& p) const {
        return std::binary_search(elems_.begin(), elems_.end(), p);
    }

    // index in the sorted element list, or -1
    int index_of(const Perm<N>& p) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
        if (it == elems_.end() || *it != p) return -1;
        return int(it - elems_.begin());
    }

    const std::vector<Perm<N>>& elements() const { return elems_; }
    const std::vector<Perm<N>>& generators() const { return gens_; }

    // orbit of point 0 is everything
    bool is_transitive() const {
        uint32_t reach = 1, prev = 0;
        while (reach != prev) {
            prev = reach;
            for (const auto& e : elems_)
                for (int x = 0; x < N; ++x)
                    if (reach & (1u << x)) reach |= 1u << e.img[x];
        }
        return reach == (1u << N) - 1;
    }

    bool operator==(const GroupTable& o) const { return elems_ == o.elems_; }

  private:
    std::vector<Perm<N>> elems_;  // sorted
    std::vector<Perm<N>> gens_;
};

struct ChainResult {
    int length = 0;             // number of strict inclusions in the longest chain
    size_t subgroup_count = 0;  // distinct subgroups discovered
    bool closure_validated = false;
};

// Longest strictly increasing subgroup chain of g, counted as the number of
// inclusion links.  Subgroups are enumerated by closing singletons and then
// repeatedly extending every discovered subgroup by one element until no new
// subgroup appears; the final no-progress pass is exactly the closure
// invariant (adding any element to any discovered subgroup re-closes to a
// discovered subgroup), so the enumeration is self-checking rather than
// relying on a bound on the number of generators.
template <int N>
ChainResult max_chain_length(const GroupTable<N>& g);

// --- implementation ---

namespace detail {

struct BitsetHash {
    size_t operator()(const std::vector<uint64_t>& v) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : v) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return size_t(h);
    }
};

}  // namespace detail

template <int N>
ChainResult max_chain_length(const GroupTable<N>& g) {
    const int n = int(g.order());
    const auto& elems = g.elements();

    // local multiplication table over element ids
    std::vector<uint16_t> mul(size_t(n) * n);
    {
        std::unordered_map<uint64_t, uint16_t> idx;
        auto key = [](const Perm<N>& p) {
            uint64_t k = 0;
            for (int i = 0; i < N && i < 12; ++i) k = k * 32 + p.img[i];
            uint64_t k2 = 0;
            for (int i = 12; i < N; ++i) k2 = k2 * 32 + p.img[i];
            return k ^ (k2 * 0x9e3779b97f4a7c15ull);
        };
        idx.reserve(size_t(n) * 2);
        for (int i = 0; i < n; ++i) idx[key(elems[i])] = uint16_t(i);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                mul[size_t(i) * n + j] = idx.at(key(elems[i] * elems[j]));
    }
    const int id_elt = g.index_of(Perm<N>::identity());

    const int words = (n + 63) / 64;
    using Bits = std::vector<uint64_t>;
    auto close_ids = [&](const std::vector<uint16_t>& gens) {
        Bits seen(words, 0);
        seen[id_elt / 64] |= 1ull << (id_elt % 64);
        std::vector<uint16_t> order_list{uint16_t(id_elt)};
        for (size_t head = 0; head < order_list.size(); ++head) {
            uint16_t e = order_list[head];
            for (uint16_t h : gens) {
                uint16_t f = mul[size_t(e) * n + h];
                if (!(seen[f / 64] & (1ull << (f % 64)))) {
                    seen[f / 64] |= 1ull << (f % 64);
                    order_list.push_back(f);
                }
            }
        }
        return seen;
    };

    std::unordered_map<Bits, uint32_t, detail::BitsetHash> pos;
    std::vector<Bits> subs;
    std::vector<std::vector<uint16_t>> sub_gens;
    std::vector<int> sub_order;
    auto add = [&](Bits b, std::vector<uint16_t> gens) {
        auto [it, fresh] = pos.emplace(std::move(b), uint32_t(subs.size()));
        if (fresh) {
            subs.push_back(it->first);
            sub_gens.push_back(std::move(gens));
            int c = 0;
            for (uint64_t w : subs.back()) c += __builtin_popcountll(w);
            sub_order.push_back(c);
            return true;
        }
        return false;
    };

    // cyclic subgroups: extending by x is the same as extending by <x>,
    // so one representative generator per cyclic subgroup suffices
    std::vector<uint16_t> cyc_reps;
    {
        std::unordered_map<Bits, uint16_t, detail::BitsetHash> seen_cyc;
        for (uint16_t x = 0; x < n; ++x) {
            Bits b = close_ids({x});
            if (seen_cyc.emplace(b, x).second) {
                cyc_reps.push_back(x);
                add(std::move(b), {x});
            }
        }
    }

    // work queue: extend each discovered subgroup by every cyclic
    // representative once; new subgroups join the queue as they appear
    for (size_t s = 0; s < subs.size(); ++s) {
        for (uint16_t x : cyc_reps) {
            if (subs[s][x / 64] & (1ull << (x % 64))) continue;
            std::vector<uint16_t> gens = sub_gens[s];
            gens.push_back(x);
            add(close_ids(gens), gens);
        }
    }
    // closure invariant: <H, x> is already discovered for every discovered H
    // and every x (extension by x equals extension by its cyclic subgroup,
    // so the cyclic representatives cover all 'n' choices of x)
    bool validated_clean = true;
    for (size_t s = 0; s < subs.size() && validated_clean; ++s) {
        for (uint16_t x : cyc_reps) {
            if (subs[s][x / 64] & (1ull << (x % 64))) continue;
            std::vector<uint16_t> gens = sub_gens[s];
            gens.push_back(x);
            if (!pos.count(close_ids(gens))) {
                validated_clean = false;
                break;
            }
        }
    }

    // longest-chain DP over the containment order
    std::vector<uint32_t> by_order(subs.size());
    for (uint32_t i = 0; i < subs.size(); ++i) by_order[i] = i;
    std::sort(by_order.begin(), by_order.end(),
              [&](uint32_t a, uint32_t b) { return sub_order[a] < sub_order[b]; });
    auto contains_all = [&](const Bits& big, const Bits& small) {
        for (int w = 0; w < words; ++w)
            if ((small[w] & ~big[w]) != 0) return false;
        return true;
    };
    std::vector<int> best(subs.size(), 0);
    int global_best = 0;
    uint32_t full_idx = 0;
    for (size_t a = 0; a < by_order.size(); ++a) {
        uint32_t i = by_order[a];
        for (size_t b = 0; b < a; ++b) {
            uint32_t j = by_order[b];
            if (sub_order[j] >= sub_order[i] || sub_order[i] % sub_order[j] != 0) continue;
            if (best[j] + 1 > best[i] && contains_all(subs[i], subs[j]))
                best[i] = best[j] + 1;
        }
        if (sub_order[i] == n) full_idx = i;
    }
    global_best = best[full_idx];

    return ChainResult{global_best, subs.size(), validated_clean};
}

}  // namespace hurwitz

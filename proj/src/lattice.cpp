#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "hurwitz/a6.hpp"
#include "hurwitz/parallel.hpp"

namespace hurwitz {

namespace {

constexpr int kWords = (Universe::kA6Order + 63) / 64;
using Bits = std::vector<uint64_t>;

struct BitsHash {
    size_t operator()(const Bits& v) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t w : v) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return size_t(h);
    }
};

inline bool bit(const Bits& b, uint16_t x) { return b[x >> 6] & (1ull << (x & 63)); }
inline void set_bit(Bits& b, uint16_t x) { b[x >> 6] |= 1ull << (x & 63); }

}  // namespace

SubgroupLattice::SubgroupLattice(const Universe& u) : u_(u) {
    const int n = Universe::kA6Order;

    std::vector<std::vector<uint16_t>> gens_of;
    std::unordered_map<Bits, uint32_t, BitsHash> pos;

    auto close_ids = [&](const std::vector<uint16_t>& gens) {
        Bits seen(kWords, 0);
        set_bit(seen, u.identity_id());
        std::vector<uint16_t> list{u.identity_id()};
        for (size_t head = 0; head < list.size(); ++head)
            for (uint16_t h : gens) {
                uint16_t f = u.mul(list[head], h);
                if (!bit(seen, f)) {
                    set_bit(seen, f);
                    list.push_back(f);
                }
            }
        return seen;
    };

    auto add = [&](Bits b, std::vector<uint16_t> gens) -> bool {
        auto [it, fresh] = pos.emplace(std::move(b), uint32_t(bits_.size()));
        if (!fresh) return false;
        bits_.push_back(it->first);
        gens_of.push_back(std::move(gens));
        return true;
    };

    // one representative element per distinct cyclic subgroup; extending a
    // subgroup by x only depends on <x>
    std::vector<uint16_t> cyc_reps;
    {
        std::unordered_map<Bits, uint16_t, BitsHash> cyc_seen;
        for (uint16_t x = 0; x < n; ++x) {
            Bits b = close_ids({x});
            if (cyc_seen.emplace(b, x).second) {
                cyc_reps.push_back(x);
                add(std::move(b), {x});
            }
        }
    }

    // extend every subgroup by every cyclic representative, to a fixpoint
    for (size_t s = 0; s < bits_.size(); ++s)
        for (uint16_t x : cyc_reps) {
            if (bit(bits_[s], x)) continue;
            std::vector<uint16_t> g = gens_of[s];
            g.push_back(x);
            add(close_ids(g), g);
        }

    // closure invariant: re-extending any discovered subgroup by any element
    // stays inside the discovered set
    {
        const int total = int(bits_.size());
        bool ok = true;
#pragma omp parallel for schedule(dynamic, 8) reduction(&& : ok)
        for (int s = 0; s < total; ++s) {
            for (uint16_t x : cyc_reps) {
                if (bit(bits_[s], x)) continue;
                std::vector<uint16_t> g = gens_of[s];
                g.push_back(x);
                if (!pos.count(close_ids(g))) ok = false;
            }
        }
        validated_ = ok;
    }

    const int total = int(bits_.size());
    order_.resize(total);
    transitive_.resize(total);
    for (int s = 0; s < total; ++s) {
        int c = 0;
        for (uint64_t w : bits_[s]) c += __builtin_popcountll(w);
        order_[s] = uint16_t(c);
        if (order_[s] == 1) trivial_ = uint16_t(s);
        if (order_[s] == n) full_ = uint16_t(s);
        // orbit of point 0
        uint8_t reach = 1, prev = 0;
        while (reach != prev) {
            prev = reach;
            for (int w = 0; w < kWords; ++w) {
                uint64_t word = bits_[s][w];
                while (word) {
                    int e = w * 64 + __builtin_ctzll(word);
                    word &= word - 1;
                    const Perm6& p = u.a6_at(uint16_t(e));
                    for (int x = 0; x < 6; ++x)
                        if (reach & (1 << x)) reach |= uint8_t(1 << p.img[x]);
                }
            }
        }
        transitive_[s] = (reach == 0x3f);
    }

    extend_.assign(size_t(total) * Universe::kClassSize, 0);
    for (int s = 0; s < total; ++s)
        for (int c = 0; c < Universe::kClassSize; ++c) {
            uint16_t e = u.class_elem(uint8_t(c));
            if (bit(bits_[s], e)) {
                extend_[size_t(s) * Universe::kClassSize + c] = uint16_t(s);
            } else {
                std::vector<uint16_t> g = gens_of[s];
                g.push_back(e);
                auto it = pos.find(close_ids(g));
                if (it == pos.end()) throw std::logic_error("lattice: extension not discovered");
                extend_[size_t(s) * Universe::kClassSize + c] = uint16_t(it->second);
            }
        }

    // subgroups generated by their own class elements, ascending by order
    for (int s = 0; s < total; ++s) {
        std::vector<uint16_t> cls;
        for (int c = 0; c < Universe::kClassSize; ++c)
            if (bit(bits_[s], u.class_elem(uint8_t(c)))) cls.push_back(u.class_elem(uint8_t(c)));
        if (!cls.empty() && close_ids(cls) == bits_[s]) class_generated_.push_back(uint16_t(s));
    }
    std::sort(class_generated_.begin(), class_generated_.end(),
              [&](uint16_t a, uint16_t b) { return order_[a] < order_[b]; });

    // longest chain of strict inclusions
    {
        std::vector<uint32_t> by_order(total);
        for (int i = 0; i < total; ++i) by_order[i] = uint32_t(i);
        std::sort(by_order.begin(), by_order.end(),
                  [&](uint32_t a, uint32_t b) { return order_[a] < order_[b]; });
        std::vector<int> best(total, 0);
        for (size_t a = 0; a < by_order.size(); ++a) {
            uint32_t i = by_order[a];
            for (size_t bj = 0; bj < a; ++bj) {
                uint32_t j = by_order[bj];
                if (order_[j] >= order_[i] || order_[i] % order_[j] != 0) continue;
                if (best[j] + 1 > best[i] && contains_subgroup(uint16_t(i), uint16_t(j)))
                    best[i] = best[j] + 1;
            }
        }
        max_chain_ = best[full_];
    }

    // exact generating-tuple counts for all lengths up to 8, by
    // inclusion-exclusion down the class-generated sublattice
    gen_counts_.assign(9, std::vector<uint64_t>(total, 0));
    std::vector<std::array<uint64_t, 9>> f(total, std::array<uint64_t, 9>{});
    for (uint16_t h : class_generated_) {
        std::vector<uint16_t> cls;
        for (int c = 0; c < Universe::kClassSize; ++c)
            if (bit(bits_[h], u.class_elem(uint8_t(c)))) cls.push_back(u.class_elem(uint8_t(c)));
        std::vector<uint64_t> vec(n, 0);
        vec[u.identity_id()] = 1;
        for (int j = 1; j <= 8; ++j) {
            std::vector<uint64_t> next(n, 0);
            for (int g = 0; g < n; ++g) {
                uint64_t cnt = vec[g];
                if (!cnt) continue;
                for (uint16_t e : cls) next[u.mul(uint16_t(g), e)] += cnt;
            }
            vec.swap(next);
            f[h][j] = vec[u.identity_id()];
        }
    }
    for (int k = 2; k <= 8; ++k) {
        auto& g = gen_counts_[k];
        for (uint16_t h : class_generated_) {
            uint64_t tot = f[h][k];
            for (uint16_t kk : class_generated_) {
                if (kk == h) break;
                if (order_of(kk) < order_of(h) && contains_subgroup(h, kk)) tot -= g[kk];
            }
            g[h] = tot;
        }
    }
}

bool SubgroupLattice::contains_subgroup(uint16_t big, uint16_t small) const {
    for (int w = 0; w < kWords; ++w)
        if (bits_[small][w] & ~bits_[big][w]) return false;
    return true;
}

uint64_t SubgroupLattice::count_class_tuples_in(uint16_t id, int k) const {
    // walk counting: vec[g] = #words of length j from (class ∩ H) with product g
    std::vector<uint16_t> cls;
    for (int c = 0; c < Universe::kClassSize; ++c)
        if (bit(bits_[id], u_.class_elem(uint8_t(c)))) cls.push_back(u_.class_elem(uint8_t(c)));
    std::vector<uint64_t> vec(Universe::kA6Order, 0);
    vec[u_.identity_id()] = 1;
    for (int j = 0; j < k; ++j) {
        std::vector<uint64_t> next(Universe::kA6Order, 0);
        for (int g = 0; g < Universe::kA6Order; ++g) {
            uint64_t cnt = vec[g];
            if (!cnt) continue;
            for (uint16_t e : cls) next[u_.mul(uint16_t(g), e)] += cnt;
        }
        vec.swap(next);
    }
    return vec[u_.identity_id()];
}

uint64_t SubgroupLattice::count_generating_tuples(uint16_t id, int k) const {
    if (k < 1 || k > 8) throw std::invalid_argument("count_generating_tuples: k out of range 1..8");
    return gen_counts_[k][id];
}

}  // namespace hurwitz

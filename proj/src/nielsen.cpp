#include "hurwitz/nielsen.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "hurwitz/parallel.hpp"
#include "hurwitz/u64set.hpp"

namespace hurwitz {

Tuple tuple_from_perms(const std::vector<Perm6>& ps) {
    const Universe& u = Universe::get();
    if (ps.empty() || ps.size() > 8) throw std::invalid_argument("tuple: length must be 1..8");
    Tuple t;
    t.k = uint8_t(ps.size());
    for (size_t i = 0; i < ps.size(); ++i) {
        int id = u.a6_table().index_of(ps[i]);
        int c = (id >= 0) ? u.class_of_a6(uint16_t(id)) : -1;
        if (c < 0) throw std::invalid_argument("tuple: entry is not a double transposition");
        t.e[i] = uint8_t(c);
    }
    return t;
}

Tuple parse_tuple(std::string_view s) { return tuple_from_perms(parse_perm_list<6>(s)); }

std::string tuple_string(const Tuple& t) {
    const Universe& u = Universe::get();
    std::string out;
    for (int i = 0; i < t.k; ++i) {
        if (i) out += ' ';
        out += cycle_string(u.class_perm(t.e[i]));
    }
    return out;
}

std::vector<Perm6> tuple_perms(const Tuple& t) {
    const Universe& u = Universe::get();
    std::vector<Perm6> out;
    out.reserve(t.k);
    for (int i = 0; i < t.k; ++i) out.push_back(u.class_perm(t.e[i]));
    return out;
}

uint16_t tuple_product(const Tuple& t) {
    const Universe& u = Universe::get();
    uint16_t p = u.identity_id();
    for (int i = 0; i < t.k; ++i) p = u.mul(p, u.class_elem(t.e[i]));
    return p;
}

uint16_t tuple_subgroup(const Tuple& t) {
    const Universe& u = Universe::get();
    const SubgroupLattice& lat = u.lattice();
    uint16_t id = lat.trivial_id();
    for (int i = 0; i < t.k; ++i) id = lat.extend(id, t.e[i]);
    return id;
}

uint16_t lattice_id_of(const GroupTable<6>& g) {
    const Universe& u = Universe::get();
    const SubgroupLattice& lat = u.lattice();
    for (int s = 0; s < lat.count(); ++s) {
        if (lat.order_of(uint16_t(s)) != g.order()) continue;
        const auto& bits = lat.member_bits(uint16_t(s));
        bool same = true;
        for (int w = 0; w < 6 && same; ++w) {
            uint64_t word = bits[w];
            while (word) {
                int e = w * 64 + __builtin_ctzll(word);
                word &= word - 1;
                if (!g.contains(u.a6_at(uint16_t(e)))) {
                    same = false;
                    break;
                }
            }
        }
        if (same) return uint16_t(s);
    }
    throw std::invalid_argument("lattice_id_of: not a subgroup of A6");
}

bool is_nielsen(const Tuple& t, const GroupTable<6>& g) {
    const Universe& u = Universe::get();
    if (tuple_product(t) != u.identity_id()) return false;
    return tuple_subgroup(t) == lattice_id_of(g);
}

Tuple braid_move(const Tuple& t, int pos, Dir dir) {
    if (pos < 0 || pos + 1 >= t.k) throw std::invalid_argument("braid_move: position out of range");
    const Universe& u = Universe::get();
    Tuple r = t;
    uint8_t a = t.e[pos], b = t.e[pos + 1];
    if (dir == Dir::forward) {
        r.e[pos] = b;
        r.e[pos + 1] = u.braid_conj(a, b);  // b^-1 a b
    } else {
        r.e[pos] = u.braid_conj(b, a);  // a b a^-1 (entries are involutions)
        r.e[pos + 1] = a;
    }
    return r;
}

Tuple apply_word(Tuple t, const std::vector<Move>& word) {
    for (const Move& m : word) t = braid_move(t, m.pos, m.dir);
    return t;
}

std::vector<Move> inverse_word(const std::vector<Move>& word) {
    std::vector<Move> out;
    out.reserve(word.size());
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        out.push_back({it->pos, it->dir == Dir::forward ? Dir::backward : Dir::forward});
    return out;
}

Tuple conjugate_tuple(const Tuple& t, uint16_t s6_id) {
    const Universe& u = Universe::get();
    Tuple r = t;
    for (int i = 0; i < t.k; ++i) r.e[i] = u.conj_class(t.e[i], s6_id);
    return r;
}

uint64_t canonical_key(const Tuple& t, Canon canon) {
    if (canon == Canon::none) return t.key();
    const Universe& u = Universe::get();
    // the minimum's first byte is always class 0 (conjugation is transitive
    // on the class), so only conjugators sending entry 0 there can win
    auto conjs = (canon == Canon::inner) ? u.inner_canon_conjs(t.e[0]) : u.abs_canon_conjs(t.e[0]);
    uint64_t best = ~0ull;
    for (uint16_t s : conjs) {
        uint64_t key = 0;
        for (int i = 0; i < t.k; ++i) key = (key << 8) | u.conj_class(t.e[i], s);
        key <<= 8 * (8 - t.k);
        best = std::min(best, key);
    }
    return best;
}

bool GroupFilter::matches(uint16_t sub_id) const {
    switch (kind) {
        case Kind::any:
            return true;
        case Kind::exact:
            return sub_id == subgroup_id;
        case Kind::transitive_of_order: {
            const SubgroupLattice& lat = Universe::get().lattice();
            return lat.order_of(sub_id) == order && lat.transitive(sub_id);
        }
    }
    return false;
}

namespace {

// shared backtracking core: iterate entries e0..e_{k-2} over the class, the
// last entry is forced to the inverse of the running product
template <typename Emit>
uint64_t backtrack(int k, const GroupFilter& filter, int first_lo, int first_hi, Emit emit) {
    const Universe& u = Universe::get();
    const SubgroupLattice& lat = u.lattice();
    const bool track_subgroup = filter.kind != GroupFilter::Kind::any;

    Tuple t;
    t.k = uint8_t(k);
    uint64_t count = 0;
    std::array<uint16_t, 9> prod{};
    std::array<uint16_t, 9> sub{};
    prod[0] = u.identity_id();
    sub[0] = lat.trivial_id();

    // depth d = number of fixed entries, 0-based entry index == d
    std::array<int, 8> choice{};
    int d = 0;
    choice[0] = first_lo;
    while (d >= 0) {
        if (choice[d] >= (d == 0 ? first_hi : Universe::kClassSize)) {
            --d;
            if (d >= 0) ++choice[d];
            continue;
        }
        uint8_t c = uint8_t(choice[d]);
        t.e[d] = c;
        prod[d + 1] = u.mul(prod[d], u.class_elem(c));
        if (track_subgroup) sub[d + 1] = lat.extend(sub[d], c);
        if (d == k - 2) {
            // the last entry must invert the running product
            uint16_t last = u.inv(prod[d + 1]);
            int lc = u.class_of_a6(last);
            if (lc >= 0) {
                t.e[k - 1] = uint8_t(lc);
                uint16_t final_sub =
                    track_subgroup ? lat.extend(sub[d + 1], uint8_t(lc)) : uint16_t(0);
                if (!track_subgroup || filter.matches(final_sub)) {
                    ++count;
                    emit(t, final_sub);
                }
            }
            ++choice[d];
        } else {
            ++d;
            choice[d] = 0;
        }
    }
    return count;
}

}  // namespace

uint64_t enumerate_tuples(int k, const GroupFilter& filter,
                          const std::function<void(const Tuple&)>& visit) {
    if (k < 2 || k > 8) throw std::invalid_argument("enumerate: k out of range 2..8");
    // an 'any' filter must still reject non-filter cases consistently;
    // backtrack handles it, we only forward the visit
    if (visit)
        return backtrack(k, filter, 0, Universe::kClassSize,
                         [&](const Tuple& t, uint16_t) { visit(t); });
    return backtrack(k, filter, 0, Universe::kClassSize, [](const Tuple&, uint16_t) {});
}

uint64_t count_tuples(int k, const GroupFilter& filter, int workers) {
    if (k < 2 || k > 8) throw std::invalid_argument("count: k out of range 2..8");
    if (workers <= 1 || k <= 3) return enumerate_tuples(k, filter, nullptr);
    // split on the first entry; each task runs the serial core on its slice
    uint64_t total = 0;
    omp_set_num_threads(workers);
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (int c0 = 0; c0 < Universe::kClassSize; ++c0)
        total += backtrack(k, filter, c0, c0 + 1, [](const Tuple&, uint16_t) {});
    return total;
}

std::vector<uint64_t> collect_states(int k, const GroupFilter& filter, Canon canon, int workers) {
    if (k < 2 || k > 8) throw std::invalid_argument("collect_states: k out of range 2..8");
    if (workers <= 1) {
        U64Set set(1 << 12);
        backtrack(k, filter, 0, Universe::kClassSize,
                  [&](const Tuple& t, uint16_t) { set.insert(canonical_key(t, canon)); });
        return set.sorted_keys();
    }
    omp_set_num_threads(workers);
    std::vector<U64Set> local(size_t(workers), U64Set(1 << 12));
#pragma omp parallel for schedule(dynamic)
    for (int c0 = 0; c0 < Universe::kClassSize; ++c0) {
        U64Set& mine = local[size_t(omp_get_thread_num())];
        backtrack(k, filter, c0, c0 + 1,
                  [&](const Tuple& t, uint16_t) { mine.insert(canonical_key(t, canon)); });
    }
    U64Set merged(1 << 16);
    for (const auto& s : local) s.for_each([&](uint64_t key) { merged.insert(key); });
    return merged.sorted_keys();
}

uint64_t enumerate_class_tuples(int k, const std::function<void(const Tuple&)>& visit) {
    return enumerate_tuples(k, GroupFilter::any(), visit);
}

uint64_t enumerate_nielsen(int k, const GroupTable<6>& g,
                           const std::function<void(const Tuple&)>& visit) {
    return enumerate_tuples(k, GroupFilter::exact(lattice_id_of(g)), visit);
}

namespace {

// successors of one state under all moves in both directions (at most 14)
inline int succ_keys(const Universe& u, const Tuple& t, Canon canon,
                     std::array<uint64_t, 14>& out) {
    int n = 0;
    for (int pos = 0; pos + 1 < t.k; ++pos) {
        uint8_t a = t.e[pos], b = t.e[pos + 1];
        Tuple f = t;
        f.e[pos] = b;
        f.e[pos + 1] = u.braid_conj(a, b);
        out[n++] = canonical_key(f, canon);
        Tuple g = t;
        g.e[pos] = u.braid_conj(b, a);
        g.e[pos + 1] = a;
        out[n++] = canonical_key(g, canon);
    }
    return n;
}

}  // namespace

std::vector<uint64_t> braid_orbit(const Tuple& seed, Canon canon, int workers) {
    const Universe& u = Universe::get();
    const int k = seed.k;
    U64Set visited(1 << 10);
    std::vector<uint64_t> frontier;
    uint64_t s0 = canonical_key(seed, canon);
    visited.insert(s0);
    frontier.push_back(s0);

    std::vector<uint64_t> cand;
    std::array<uint64_t, 14> buf;
    while (!frontier.empty()) {
        cand.clear();
        if (workers > 1 && frontier.size() >= 256) {
            omp_set_num_threads(workers);
            std::vector<std::vector<uint64_t>> local(static_cast<size_t>(workers));
#pragma omp parallel
            {
                auto& mine = local[size_t(omp_get_thread_num())];
                std::array<uint64_t, 14> b;
#pragma omp for schedule(static)
                for (size_t i = 0; i < frontier.size(); ++i) {
                    Tuple t = Tuple::from_key(frontier[i], k);
                    int n = succ_keys(u, t, canon, b);
                    for (int s = 0; s < n; ++s)
                        if (!visited.contains(b[s])) mine.push_back(b[s]);
                }
            }
            for (auto& v : local) cand.insert(cand.end(), v.begin(), v.end());
        } else {
            for (uint64_t cur : frontier) {
                Tuple t = Tuple::from_key(cur, k);
                int n = succ_keys(u, t, canon, buf);
                for (int s = 0; s < n; ++s)
                    if (!visited.contains(buf[s])) cand.push_back(buf[s]);
            }
        }
        frontier.clear();
        for (uint64_t key : cand)
            if (visited.insert(key)) frontier.push_back(key);
    }
    return visited.sorted_keys();
}

std::vector<uint32_t> partition_states(const std::vector<uint64_t>& states, int k, Canon canon,
                                       int workers, uint32_t* orbit_count) {
    const Universe& u = Universe::get();
    const uint32_t n = uint32_t(states.size());
    const uint32_t kMiss = ~0u;
    std::vector<uint32_t> orbit(n, kMiss);
    auto find_index = [&](uint64_t key) -> uint32_t {
        auto it = std::lower_bound(states.begin(), states.end(), key);
        if (it == states.end() || *it != key) return kMiss;
        return uint32_t(it - states.begin());
    };

    bool closed = true;
    uint32_t next_orbit = 0;
    std::vector<uint32_t> frontier, nextf;
    std::array<uint64_t, 14> buf;
    for (uint32_t start = 0; start < n; ++start) {
        if (orbit[start] != kMiss) continue;
        const uint32_t oid = next_orbit++;
        orbit[start] = oid;
        frontier.assign(1, start);
        while (!frontier.empty()) {
            nextf.clear();
            if (workers > 1 && frontier.size() >= 256) {
                omp_set_num_threads(workers);
                std::vector<std::vector<uint32_t>> local(static_cast<size_t>(workers));
#pragma omp parallel
                {
                    auto& mine = local[size_t(omp_get_thread_num())];
                    std::array<uint64_t, 14> b;
#pragma omp for schedule(static) reduction(&& : closed)
                    for (size_t i = 0; i < frontier.size(); ++i) {
                        Tuple t = Tuple::from_key(states[frontier[i]], k);
                        int cnt = succ_keys(u, t, canon, b);
                        for (int s = 0; s < cnt; ++s) {
                            uint32_t j = find_index(b[s]);
                            if (j == kMiss)
                                closed = false;
                            else if (orbit[j] == kMiss)
                                mine.push_back(j);
                        }
                    }
                }
                for (auto& v : local)
                    for (uint32_t j : v)
                        if (orbit[j] == kMiss) {
                            orbit[j] = oid;
                            nextf.push_back(j);
                        }
            } else {
                for (uint32_t idx : frontier) {
                    Tuple t = Tuple::from_key(states[idx], k);
                    int cnt = succ_keys(u, t, canon, buf);
                    for (int s = 0; s < cnt; ++s) {
                        uint32_t j = find_index(buf[s]);
                        if (j == kMiss) {
                            closed = false;
                            continue;
                        }
                        if (orbit[j] == kMiss) {
                            orbit[j] = oid;
                            nextf.push_back(j);
                        }
                    }
                }
            }
            frontier.swap(nextf);
        }
    }
    if (!closed) throw std::logic_error("partition_states: state set not closed under braid moves");
    if (orbit_count) *orbit_count = next_orbit;
    return orbit;
}

Tuple block_conjugate(const Tuple& t, int i, int j, const Perm6& gamma) {
    const Universe& u = Universe::get();
    if (i < 0 || j >= t.k || i > j) throw std::invalid_argument("block_conjugate: bad block");
    Tuple block;
    block.k = uint8_t(j - i + 1);
    uint16_t prod = u.identity_id();
    std::vector<Perm6> block_perms;
    for (int p = i; p <= j; ++p) {
        block.e[p - i] = t.e[p];
        prod = u.mul(prod, u.class_elem(t.e[p]));
        block_perms.push_back(u.class_perm(t.e[p]));
    }
    if (prod != u.identity_id())
        throw std::invalid_argument("block_conjugate: block product is not the identity");
    GroupTable<6> sub = GroupTable<6>::close(block_perms);
    if (!sub.contains(gamma))
        throw std::invalid_argument("block_conjugate: gamma outside the block subgroup");
    Tuple r = t;
    Perm6 ginv = gamma.inverse();
    for (int p = i; p <= j; ++p) {
        Perm6 x = conjugate(u.class_perm(t.e[p]), ginv);  // gamma * x * gamma^-1
        int id = u.a6_table().index_of(x);
        int c = u.class_of_a6(uint16_t(id));
        if (c < 0) throw std::logic_error("block_conjugate: conjugate left the class");
        r.e[p] = uint8_t(c);
    }
    return r;
}

namespace {

// words realizing block-local operations; all positions are absolute
void append_rot_left(std::vector<Move>& w, int i, int j) {
    for (int p = i; p < j; ++p) w.push_back({uint8_t(p), Dir::forward});
}
void append_rot_right(std::vector<Move>& w, int i, int j) {
    for (int p = j - 1; p >= i; --p) w.push_back({uint8_t(p), Dir::backward});
}
// conjugate the whole block by its front entry (cascade + rotate back)
void append_conj_by_front(std::vector<Move>& w, int i, int j) {
    for (int p = i; p < j; ++p) w.push_back({uint8_t(p), Dir::backward});
    append_rot_right(w, i, j);
}

}  // namespace

std::vector<Move> block_conjugate_word(const Tuple& t, int i, int j, const Perm6& gamma) {
    const Universe& u = Universe::get();
    Tuple target = block_conjugate(t, i, j, gamma);  // validates preconditions
    const int L = j - i + 1;

    auto block_key = [&](const Tuple& x) {
        uint64_t key = 0;
        for (int p = i; p <= j; ++p) key = (key << 8) | x.e[p];
        return key;
    };

    // BFS over block states; one edge = conjugation of the block by one of
    // its current entries, realized as rotations plus a cascade
    struct Parent {
        uint64_t from;
        uint8_t offset;
    };
    std::unordered_map<uint64_t, Parent> parent;
    std::vector<Tuple> frontier{t};
    parent[block_key(t)] = {block_key(t), 0xff};
    const uint64_t want = block_key(target);
    if (block_key(t) != want) {
        bool found = false;
        while (!frontier.empty() && !found) {
            std::vector<Tuple> next;
            for (const Tuple& cur : frontier) {
                for (int m = 0; m < L && !found; ++m) {
                    Perm6 g = u.class_perm(cur.e[i + m]);
                    Tuple nt = cur;
                    Perm6 ginv = g.inverse();
                    for (int p = i; p <= j; ++p) {
                        Perm6 x = conjugate(u.class_perm(cur.e[p]), ginv);
                        nt.e[p] = uint8_t(u.class_of_a6(u.a6_index(x)));
                    }
                    uint64_t nk = block_key(nt);
                    if (!parent.count(nk)) {
                        parent[nk] = {block_key(cur), uint8_t(m)};
                        next.push_back(nt);
                        if (nk == want) found = true;
                    }
                }
                if (found) break;
            }
            frontier.swap(next);
        }
        if (!found) throw std::logic_error("block_conjugate_word: target unreachable");
    }

    // unwind the BFS path, emitting words from the root outwards
    std::vector<uint8_t> offsets;
    for (uint64_t cur = want; parent.at(cur).offset != 0xff; cur = parent.at(cur).from)
        offsets.push_back(parent.at(cur).offset);
    std::reverse(offsets.begin(), offsets.end());

    std::vector<Move> word;
    for (uint8_t m : offsets) {
        for (int r = 0; r < m; ++r) append_rot_left(word, i, j);
        append_conj_by_front(word, i, j);
        for (int r = 0; r < m; ++r) append_rot_right(word, i, j);
    }
    if (apply_word(t, word) != target)
        throw std::logic_error("block_conjugate_word: verification failed");
    return word;
}

SortResult sort_to_ordered(const Tuple& t) {
    SortResult r{t, {}};
    for (uint64_t guard = 0;; ++guard) {
        if (guard > 100000000ull) throw std::logic_error("sort_to_ordered: no termination");
        int descent = -1;
        for (int i = 0; i + 1 < r.tuple.k; ++i)
            if (r.tuple.e[i] > r.tuple.e[i + 1]) {
                descent = i;
                break;
            }
        if (descent < 0) break;
        r.tuple = braid_move(r.tuple, descent, Dir::forward);
        r.word.push_back({uint8_t(descent), Dir::forward});
    }
    return r;
}

}  // namespace hurwitz

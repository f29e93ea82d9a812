#include "hurwitz/reduce.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "hurwitz/u64set.hpp"

namespace hurwitz {

ProductLaw product_law(uint8_t cx, uint8_t cy) {
    const Universe& u = Universe::get();
    uint16_t p = u.mul(u.class_elem(cx), u.class_elem(cy));
    if (p == u.identity_id()) return ProductLaw::identity;
    return u.class_of_a6(p) >= 0 ? ProductLaw::in_class : ProductLaw::neither;
}

ProductLaw product_law(const Perm6& x, const Perm6& y) {
    const Universe& u = Universe::get();
    int ix = u.class_of_a6(u.a6_index(x)), iy = u.class_of_a6(u.a6_index(y));
    if (ix < 0 || iy < 0) throw std::invalid_argument("product_law: entries must be class elements");
    return product_law(uint8_t(ix), uint8_t(iy));
}

Tuple reduce_at(const Tuple& t, int pos) {
    const Universe& u = Universe::get();
    if (pos < 0 || pos + 1 >= t.k) throw std::invalid_argument("reduce_at: position out of range");
    uint8_t a = t.e[pos], b = t.e[pos + 1];
    if (a == b || u.fix_mask(a) != u.fix_mask(b))
        throw std::invalid_argument("reduce_at: pair is not a one-reduction pair");
    uint16_t p = u.mul(u.class_elem(a), u.class_elem(b));
    int c = u.class_of_a6(p);
    if (c < 0) throw std::logic_error("reduce_at: product left the class");
    Tuple r;
    r.k = uint8_t(t.k - 1);
    for (int i = 0; i < pos; ++i) r.e[i] = t.e[i];
    r.e[pos] = uint8_t(c);
    for (int i = pos + 2; i < t.k; ++i) r.e[i - 1] = t.e[i];
    return r;
}

namespace {

// forward moves dragging entry j left until it sits at position i+1; the
// dragged entry and entry i keep their values
void append_make_adjacent(std::vector<Move>& w, int i, int j) {
    for (int p = j - 1; p > i; --p) w.push_back({uint8_t(p), Dir::forward});
}

// the two class elements sharing x's fixed points
std::array<uint8_t, 2> partners_of(uint8_t x) {
    const Universe& u = Universe::get();
    std::array<uint8_t, 2> out{};
    int n = 0;
    for (int c = 0; c < Universe::kClassSize; ++c)
        if (c != x && u.fix_mask(uint8_t(c)) == u.fix_mask(x)) out[n++] = uint8_t(c);
    if (n != 2) throw std::logic_error("partners_of: fixed-point class size != 3");
    return out;
}

struct PairHit {
    int i, j;
    bool one;  // distinct entries (one-reduction) vs equal (two-reduction)
};

// all same-fixed-points pairs of a tuple, in (i, j) order
std::vector<PairHit> same_fix_pairs(const Tuple& t) {
    const Universe& u = Universe::get();
    std::vector<PairHit> out;
    for (int i = 0; i < t.k; ++i)
        for (int j = i + 1; j < t.k; ++j)
            if (u.fix_mask(t.e[i]) == u.fix_mask(t.e[j]))
                out.push_back({i, j, t.e[i] != t.e[j]});
    return out;
}

std::vector<Move> path_word(const std::unordered_map<uint64_t, std::pair<uint64_t, Move>>& parent,
                            uint64_t from_root_to) {
    std::vector<Move> w;
    uint64_t cur = from_root_to;
    while (true) {
        auto it = parent.find(cur);
        if (it == parent.end() || it->second.first == cur) break;
        w.push_back(it->second.second);
        cur = it->second.first;
    }
    std::reverse(w.begin(), w.end());
    return w;
}

}  // namespace

std::optional<Reduction> find_reduction(const Tuple& t, int depth) {
    const int k = t.k;
    if (k < 2) return std::nullopt;
    std::unordered_map<uint64_t, std::pair<uint64_t, Move>> parent;
    std::vector<uint64_t> level{t.key()};
    parent[t.key()] = {t.key(), Move{0, Dir::forward}};

    auto finish = [&](uint64_t state_key, const PairHit& hit) {
        Reduction r;
        r.kind = hit.one ? Reduction::Kind::one : Reduction::Kind::two;
        r.braid_prefix = path_word(parent, state_key);
        append_make_adjacent(r.braid_prefix, hit.i, hit.j);
        r.pos = hit.i;
        Tuple s = Tuple::from_key(state_key, k);
        for (int p = hit.j - 1; p > hit.i; --p) s = braid_move(s, p, Dir::forward);
        if (hit.one) {
            r.result = reduce_at(s, hit.i);
        } else {
            Tuple red;
            red.k = uint8_t(k - 2);
            int n = 0;
            for (int p = 0; p < k; ++p)
                if (p != hit.i && p != hit.i + 1) red.e[n++] = s.e[p];
            r.result = red;
        }
        return r;
    };

    for (int d = 0; d <= depth; ++d) {
        // shallowest level first; one-reductions preferred within the level
        const PairHit* best = nullptr;
        uint64_t best_state = 0;
        PairHit best_hit{};
        for (uint64_t key : level) {
            Tuple s = Tuple::from_key(key, k);
            for (const PairHit& h : same_fix_pairs(s)) {
                if (h.one) return finish(key, h);
                if (!best) {
                    best_hit = h;
                    best_state = key;
                    best = &best_hit;
                }
            }
        }
        if (best) return finish(best_state, best_hit);
        if (d == depth) break;
        std::vector<uint64_t> next;
        for (uint64_t key : level) {
            Tuple s = Tuple::from_key(key, k);
            for (int pos = 0; pos + 1 < k; ++pos)
                for (Dir dir : {Dir::forward, Dir::backward}) {
                    Tuple n2 = braid_move(s, pos, dir);
                    uint64_t nk = n2.key();
                    if (parent.emplace(nk, std::make_pair(key, Move{uint8_t(pos), dir})).second)
                        next.push_back(nk);
                }
        }
        level.swap(next);
        if (level.empty()) break;
    }
    return std::nullopt;
}

Tuple apply_reduction(const Tuple& t, const Reduction& r) {
    const Universe& u = Universe::get();
    Tuple s = apply_word(t, r.braid_prefix);
    if (r.pos < 0 || r.pos + 1 >= s.k) throw std::invalid_argument("apply_reduction: bad position");
    uint8_t a = s.e[r.pos], b = s.e[r.pos + 1];
    if (u.fix_mask(a) != u.fix_mask(b))
        throw std::invalid_argument("apply_reduction: pair does not share fixed points");
    Tuple out;
    if (r.kind == Reduction::Kind::two) {
        if (a != b) throw std::invalid_argument("apply_reduction: two-reduction pair not equal");
        out.k = uint8_t(s.k - 2);
        int n = 0;
        for (int p = 0; p < s.k; ++p)
            if (p != r.pos && p != r.pos + 1) out.e[n++] = s.e[p];
    } else {
        out = reduce_at(s, r.pos);
    }
    if (r.result.k != 0 && !(out == r.result))
        throw std::invalid_argument("apply_reduction: reduction does not match this tuple");
    return out;
}

std::optional<Reduction> force_one_reduction(const Tuple& t, const Reduction& two) {
    const Universe& u = Universe::get();
    if (two.kind != Reduction::Kind::two)
        throw std::invalid_argument("force_one_reduction: expected a two-reduction");
    // normalize: repeated pair in front, tail is then a product-one block
    Tuple s = apply_word(t, two.braid_prefix);
    std::vector<Move> prefix = two.braid_prefix;
    for (int p = two.pos; p > 0; --p) {
        // move the pair left keeping its entries: [fwd p-1, fwd p]
        s = braid_move(s, p - 1, Dir::forward);
        s = braid_move(s, p, Dir::forward);
        prefix.push_back({uint8_t(p - 1), Dir::forward});
        prefix.push_back({uint8_t(p), Dir::forward});
    }
    if (s.e[0] != s.e[1]) throw std::logic_error("force_one_reduction: lost the repeated pair");
    if (s.k < 3) return std::nullopt;

    const uint8_t x = s.e[0];
    auto partners = partners_of(x);
    // tail subgroup and a conjugator turning the tail head into a partner
    std::vector<Perm6> tail;
    for (int p = 2; p < s.k; ++p) tail.push_back(u.class_perm(s.e[p]));
    GroupTable<6> sub = GroupTable<6>::close(tail);
    const Perm6 head = u.class_perm(s.e[2]);
    std::optional<Perm6> gamma;
    for (const Perm6& g : sub.elements()) {
        Perm6 conj = conjugate(head, g.inverse());  // g * head * g^-1
        int id = u.a6_table().index_of(conj);
        int c = u.class_of_a6(uint16_t(id));
        if (c == partners[0] || c == partners[1]) {
            gamma = g;
            break;
        }
    }
    if (!gamma) return std::nullopt;

    std::vector<Move> fried = block_conjugate_word(s, 2, s.k - 1, *gamma);
    Tuple s2 = apply_word(s, fried);
    prefix.insert(prefix.end(), fried.begin(), fried.end());

    Reduction r;
    r.kind = Reduction::Kind::one;
    r.braid_prefix = std::move(prefix);
    r.pos = 1;  // pair (x, conjugated head)
    r.result = reduce_at(s2, 1);
    return r;
}

std::optional<PruneResult> prune_generators(const std::vector<Perm6>& s, int target, int depth) {
    const Universe& u = Universe::get();
    const SubgroupLattice& lat = u.lattice();
    const int n = int(s.size());
    if (target < 3 || target > 5) throw std::invalid_argument("prune_generators: target must be 3..5");
    if (n < target) throw std::invalid_argument("prune_generators: sequence shorter than target");
    Tuple t = tuple_from_perms(s);  // validates class membership
    if (lat.order_of(tuple_subgroup(t)) != 360)
        throw std::invalid_argument("prune_generators: sequence does not generate A6");

    auto subset_search = [&](const Tuple& tup) -> std::optional<std::vector<int>> {
        std::vector<int> idx(static_cast<size_t>(target));
        std::function<std::optional<std::vector<int>>(int, int, uint16_t)> rec =
            [&](int pos, int from, uint16_t sub) -> std::optional<std::vector<int>> {
            if (pos == target)
                return lat.order_of(sub) == 360 ? std::optional(idx) : std::nullopt;
            for (int i = from; i <= tup.k - (target - pos); ++i) {
                idx[size_t(pos)] = i;
                auto r = rec(pos + 1, i + 1, lat.extend(sub, tup.e[i]));
                if (r) return r;
            }
            return std::nullopt;
        };
        return rec(0, 0, lat.trivial_id());
    };

    auto result_from = [&](const Tuple& tup, const std::vector<int>& idx,
                           std::vector<Move> word) -> PruneResult {
        PruneResult pr;
        for (int i : idx) pr.witness.push_back(u.class_perm(tup.e[i]));
        pr.braid_word = std::move(word);
        return pr;
    };

    if (auto idx = subset_search(t)) return result_from(t, *idx, {});
    if (target >= 4) return std::nullopt;  // plain subset search is the whole contract

    // braid search for a generating triple
    std::unordered_map<uint64_t, std::pair<uint64_t, Move>> parent;
    parent[t.key()] = {t.key(), Move{0, Dir::forward}};
    std::vector<uint64_t> level{t.key()};
    for (int d = 1; d <= depth && !level.empty(); ++d) {
        std::vector<uint64_t> next;
        for (uint64_t key : level) {
            Tuple cur = Tuple::from_key(key, t.k);
            for (int pos = 0; pos + 1 < t.k; ++pos)
                for (Dir dir : {Dir::forward, Dir::backward}) {
                    Tuple nt = braid_move(cur, pos, dir);
                    uint64_t nk = nt.key();
                    if (!parent.emplace(nk, std::make_pair(key, Move{uint8_t(pos), dir})).second)
                        continue;
                    if (auto idx = subset_search(nt))
                        return result_from(nt, *idx, path_word(parent, nk));
                    next.push_back(nk);
                }
        }
        level.swap(next);
    }
    return std::nullopt;
}

std::optional<std::vector<Move>> braid_word_between(const Tuple& a, const Tuple& b,
                                                    uint64_t state_cap) {
    if (a.k != b.k) return std::nullopt;
    if (a == b) return std::vector<Move>{};
    std::unordered_map<uint64_t, std::pair<uint64_t, Move>> parent;
    parent[a.key()] = {a.key(), Move{0, Dir::forward}};
    std::vector<uint64_t> level{a.key()};
    const uint64_t want = b.key();
    while (!level.empty()) {
        std::vector<uint64_t> next;
        for (uint64_t key : level) {
            Tuple cur = Tuple::from_key(key, a.k);
            for (int pos = 0; pos + 1 < a.k; ++pos)
                for (Dir dir : {Dir::forward, Dir::backward}) {
                    Tuple nt = braid_move(cur, pos, dir);
                    uint64_t nk = nt.key();
                    if (!parent.emplace(nk, std::make_pair(key, Move{uint8_t(pos), dir})).second)
                        continue;
                    if (nk == want) return path_word(parent, nk);
                    next.push_back(nk);
                }
            if (parent.size() > state_cap) return std::nullopt;
        }
        level.swap(next);
    }
    return std::nullopt;
}

namespace {

// lift one reduced move through the carried block; returns the absolute
// moves and updates the block slot
void lift_reduced_move(int j, Dir dir, int& marker, std::vector<Move>& out) {
    if (j <= marker - 2) {
        out.push_back({uint8_t(j), dir});
    } else if (j >= marker + 1) {
        out.push_back({uint8_t(j + 1), dir});
    } else if (j == marker - 1) {
        out.push_back({uint8_t(marker - 1), dir});
        out.push_back({uint8_t(marker), dir});
        marker -= 1;
    } else {  // j == marker
        out.push_back({uint8_t(marker + 1), dir});
        out.push_back({uint8_t(marker), dir});
        marker += 1;
    }
}

// normalized view of a one-reduction: tuple after prefix, pair position
struct NormalizedRed {
    Tuple full;    // k entries, pair adjacent at (pos, pos+1)
    Tuple reduced; // k-1 entries
    int pos;
};

NormalizedRed normalize_one_reduction(const Tuple& t, const Reduction& r) {
    if (r.kind != Reduction::Kind::one)
        throw std::invalid_argument("lift_braid_equivalence: reductions must be one-reductions");
    NormalizedRed n;
    n.full = apply_word(t, r.braid_prefix);
    n.pos = r.pos;
    n.reduced = reduce_at(n.full, n.pos);
    return n;
}

}  // namespace

std::vector<Move> lift_braid_equivalence(const Tuple& t1, const Tuple& t2, const Reduction& r1,
                                         const Reduction& r2, const std::vector<Move>& w) {
    const int k = t1.k;
    if (t2.k != k) throw std::invalid_argument("lift_braid_equivalence: length mismatch");
    NormalizedRed a = normalize_one_reduction(t1, r1);
    NormalizedRed b = normalize_one_reduction(t2, r2);
    if (!(apply_word(a.reduced, w) == b.reduced))
        throw std::invalid_argument("lift_braid_equivalence: w does not map the reductions");

    // replay w on the full tuple, carrying the reduced pair as a block
    std::vector<Move> word = r1.braid_prefix;
    std::vector<Move> replay;
    int marker = a.pos;
    for (const Move& m : w) lift_reduced_move(m.pos, m.dir, marker, replay);
    Tuple cur = apply_word(a.full, replay);
    word.insert(word.end(), replay.begin(), replay.end());

    // align the block slot with the target's: search the (reduced tuple,
    // slot) graph from (reduce(cur), marker) to (b.reduced, b.pos)
    if (marker != b.pos) {
        auto state_key = [](const Tuple& red, int slot) {
            return red.key() | uint64_t(slot);  // low byte of a k-1 tuple key is padding
        };
        Tuple cur_red = reduce_at(cur, marker);
        struct Edge {
            uint64_t from;
            Move mv;
        };
        std::unordered_map<uint64_t, Edge> parent;
        uint64_t root = state_key(cur_red, marker);
        uint64_t want = state_key(b.reduced, b.pos);
        parent[root] = {root, Move{0, Dir::forward}};
        std::vector<uint64_t> level{root};
        bool found = (root == want);
        while (!level.empty() && !found) {
            std::vector<uint64_t> next;
            for (uint64_t key : level) {
                int slot = int(key & 0xff);
                Tuple red = Tuple::from_key(key & ~0xffull, k - 1);
                for (int j = 0; j + 1 < k - 1 && !found; ++j)
                    for (Dir dir : {Dir::forward, Dir::backward}) {
                        Tuple nr = braid_move(red, j, dir);
                        int ns = (slot == j) ? j + 1 : (slot == j + 1 ? j : slot);
                        uint64_t nk = state_key(nr, ns);
                        if (!parent.emplace(nk, Edge{key, Move{uint8_t(j), dir}}).second) continue;
                        next.push_back(nk);
                        if (nk == want) {
                            found = true;
                            break;
                        }
                    }
                if (found) break;
            }
            level.swap(next);
        }
        if (!found)
            throw std::logic_error("lift_braid_equivalence: block alignment search failed");
        // unwind the path, then lift it move by move
        std::vector<Move> path;
        for (uint64_t curk = want; parent.at(curk).from != curk; curk = parent.at(curk).from)
            path.push_back(parent.at(curk).mv);
        std::reverse(path.begin(), path.end());
        std::vector<Move> stitched;
        for (const Move& m : path) lift_reduced_move(m.pos, m.dir, marker, stitched);
        cur = apply_word(cur, stitched);
        word.insert(word.end(), stitched.begin(), stitched.end());
    }

    // in-block adjustment: the carried pair and the target pair share the
    // same product and fixed points, so they agree or differ by one swap
    if (!(cur == b.full)) {
        cur = braid_move(cur, marker, Dir::forward);
        word.push_back({uint8_t(marker), Dir::forward});
    }
    if (!(cur == b.full)) throw std::logic_error("lift_braid_equivalence: in-block adjustment failed");

    std::vector<Move> back = inverse_word(r2.braid_prefix);
    word.insert(word.end(), back.begin(), back.end());
    if (!(apply_word(t1, word) == t2))
        throw std::logic_error("lift_braid_equivalence: verification failed");
    return word;
}

}  // namespace hurwitz

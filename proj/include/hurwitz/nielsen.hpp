// Tuples of double transpositions, the braid action twisting adjacent
// entries, canonical forms under simultaneous conjugation, backtracking
// enumeration, and braid-orbit BFS over canonical states.
//
// A tuple stores class indices (positions in the canonical 45-element class
// list), one byte per entry, at most 8 entries.  Packed big-endian into a
// uint64, lexicographic comparison of tuples is integer comparison of keys.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hurwitz/a6.hpp"

namespace hurwitz {

struct Tuple {
    std::array<uint8_t, 8> e{};
    uint8_t k = 0;

    Tuple() = default;
    Tuple(std::initializer_list<int> entries) {
        k = uint8_t(entries.size());
        int i = 0;
        for (int v : entries) e[i++] = uint8_t(v);
    }

    uint8_t& operator[](int i) { return e[i]; }
    uint8_t operator[](int i) const { return e[i]; }
    bool operator==(const Tuple& o) const { return k == o.k && e == o.e; }

    uint64_t key() const {
        uint64_t r = 0;
        for (int i = 0; i < 8; ++i) r = (r << 8) | e[i];
        return r;
    }
    static Tuple from_key(uint64_t key, int k) {
        Tuple t;
        t.k = uint8_t(k);
        for (int i = 7; i >= 0; --i) {
            t.e[i] = uint8_t(key & 0xff);
            key >>= 8;
        }
        return t;
    }
};

// tuple from explicit permutations; throws if an entry is not in the class
Tuple tuple_from_perms(const std::vector<Perm6>& ps);
// bit-exact interchange form: whitespace-separated cycle notation
Tuple parse_tuple(std::string_view s);
std::string tuple_string(const Tuple& t);
std::vector<Perm6> tuple_perms(const Tuple& t);

// product of the entries (A6 element id)
uint16_t tuple_product(const Tuple& t);
// lattice id of the subgroup generated by the entries
uint16_t tuple_subgroup(const Tuple& t);
// product-one, every entry in the class, and <entries> equals g exactly
bool is_nielsen(const Tuple& t, const GroupTable<6>& g);
// lattice id of an explicitly given subgroup of A6
uint16_t lattice_id_of(const GroupTable<6>& g);

enum class Dir : uint8_t { forward, backward };

struct Move {
    uint8_t pos;  // 0-based, acts on entries (pos, pos+1)
    Dir dir;
    bool operator==(const Move&) const = default;
};

// forward: (a, b) -> (b, b^-1 a b); backward is its inverse: (a, b) -> (a b a^-1, a)
Tuple braid_move(const Tuple& t, int pos, Dir dir);
Tuple apply_word(Tuple t, const std::vector<Move>& word);
std::vector<Move> inverse_word(const std::vector<Move>& word);

// simultaneous conjugation by an S6 element (given by S6 id)
Tuple conjugate_tuple(const Tuple& t, uint16_t s6_id);

enum class Canon : uint8_t { none, inner, abs };

// canonical key: the tuple itself (none), or the lexicographic minimum over
// simultaneous conjugation by A6 (inner) / S6 (abs)
uint64_t canonical_key(const Tuple& t, Canon canon);

// --- enumeration ---

// which generated subgroups an enumeration keeps
struct GroupFilter {
    enum class Kind : uint8_t { any, exact, transitive_of_order };
    Kind kind = Kind::any;
    uint16_t subgroup_id = 0;
    uint16_t order = 0;

    static GroupFilter any() { return {}; }
    static GroupFilter exact(uint16_t id) { return {Kind::exact, id, 0}; }
    static GroupFilter transitive_of_order(uint16_t o) {
        return {Kind::transitive_of_order, 0, o};
    }
    bool matches(uint16_t sub_id) const;
};

// visit every product-one class tuple of length k whose generated subgroup
// passes the filter, in lexicographic order; returns the count.
// visit may be null (count only).  Serial reference implementation.
uint64_t enumerate_tuples(int k, const GroupFilter& filter,
                          const std::function<void(const Tuple&)>& visit);

// parallel counting kernel over the same tree
uint64_t count_tuples(int k, const GroupFilter& filter, int workers);

// all canonical states of the filtered tuples, deduplicated, sorted
std::vector<uint64_t> collect_states(int k, const GroupFilter& filter, Canon canon, int workers);

// named wrappers for the common cases
uint64_t enumerate_class_tuples(int k, const std::function<void(const Tuple&)>& visit);
uint64_t enumerate_nielsen(int k, const GroupTable<6>& g,
                           const std::function<void(const Tuple&)>& visit);

// --- braid orbits ---

// BFS closure of the seed under braid moves at all positions, states
// identified by their canonical key.  Returns the sorted key set.
std::vector<uint64_t> braid_orbit(const Tuple& seed, Canon canon, int workers);

// orbit partition of an explicit sorted state set (must be closed under the
// canonicalized braid moves); returns orbit index per state, orbits numbered
// by ascending minimal key
std::vector<uint32_t> partition_states(const std::vector<uint64_t>& states, int k, Canon canon,
                                       int workers, uint32_t* orbit_count);

// --- structured tuple operations ---

// entries i..j (inclusive) replaced by gamma * entry * gamma^-1;
// requires product(i..j) == 1 and gamma in <entries i..j>
Tuple block_conjugate(const Tuple& t, int i, int j, const Perm6& gamma);
// braid word realizing the same transformation (block rotations and
// conjugation cascades)
std::vector<Move> block_conjugate_word(const Tuple& t, int i, int j, const Perm6& gamma);

struct SortResult {
    Tuple tuple;
    std::vector<Move> word;
};
// braid moves at descents until entries are non-decreasing in class order
SortResult sort_to_ordered(const Tuple& t);

}  // namespace hurwitz

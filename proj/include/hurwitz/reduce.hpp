// Reductions of tuples with a same-fixed-points pair: deleting an equal
// adjacent pair (2-reduction) or replacing a distinct one by its product
// (1-reduction), the braid searches that locate such pairs, generator
// pruning, and the lifting of a braid equivalence of reduced tuples to an
// equivalence of the originals.
#pragma once

#include <optional>

#include "hurwitz/nielsen.hpp"

namespace hurwitz {

enum class ProductLaw : uint8_t { in_class, identity, neither };

// classification of x*y for two class elements (interesting when the fixed
// point sets agree: then 'neither' never occurs)
ProductLaw product_law(uint8_t cx, uint8_t cy);
ProductLaw product_law(const Perm6& x, const Perm6& y);

struct Reduction {
    enum class Kind : uint8_t { one, two };
    Kind kind = Kind::one;
    std::vector<Move> braid_prefix;  // moves applied to the input first
    int pos = 0;                     // pair sits at (pos, pos+1) after the prefix
    Tuple result;                    // the shortened tuple
};

// one-reduction at an adjacent same-fixed-points pair of distinct entries,
// no prefix; throws if the pair does not qualify
Tuple reduce_at(const Tuple& t, int pos);

// Search the braid orbit of t, level by level up to `depth` moves, for a
// same-fixed-points pair (not necessarily adjacent; the prefix brings it
// adjacent).  Within the shallowest level containing any qualifying pair,
// one-reductions are preferred over two-reductions.
std::optional<Reduction> find_reduction(const Tuple& t, int depth);

Tuple apply_reduction(const Tuple& t, const Reduction& r);

// turn a two-reduction into a one-reduction by conjugating the product-one
// tail block; works whenever the tail subgroup reaches a partner of the
// repeated entry (always, when the tail generates A6)
std::optional<Reduction> force_one_reduction(const Tuple& t, const Reduction& two);

struct PruneResult {
    std::vector<Perm6> witness;   // generating subset of the (possibly braided) tuple
    std::vector<Move> braid_word; // empty unless the braid search was needed
};

// a subset of `target` entries that still generates A6: plain subset search
// for target >= 4, subset search plus braid search up to `depth` for target 3
std::optional<PruneResult> prune_generators(const std::vector<Perm6>& s, int target, int depth);

// ground-truth connecting word between two tuples in the same braid orbit
// (BFS with parent tracking; nullopt if not connected or the cap is hit)
std::optional<std::vector<Move>> braid_word_between(const Tuple& a, const Tuple& b,
                                                    uint64_t state_cap = 20000000);

// Given one-reductions r1 of t1 and r2 of t2 and a braid word w with
// w(reduce(t1)) == reduce(t2), produce a braid word mapping t1 to t2.  The
// reduced pair is carried through the replay as a block; the final
// alignment searches the (reduced tuple, block slot) graph and finishes
// with an in-block swap.  The returned word is verified by application.
std::vector<Move> lift_braid_equivalence(const Tuple& t1, const Tuple& t2, const Reduction& r1,
                                         const Reduction& r2, const std::vector<Move>& w);

}  // namespace hurwitz

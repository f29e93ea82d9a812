// Fixed data for the whole library: A6 as a subgroup of S6, the conjugacy
// class of double transpositions (45 elements, canonical order), the
// Valentiner triple cover inside S18 with its covering map and pinned
// kernel generator, and the unique order-2 lifts of class elements.
//
// Everything is enumerated once and exposed through dense index tables;
// all queries after construction are read-only and safe from any thread.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hurwitz/group.hpp"
#include "hurwitz/perm.hpp"

namespace hurwitz {

class SubgroupLattice;

// The triple cover V -> A6 with cyclic kernel of order 3.  The kernel
// generator sigma is pinned to a fixed permutation so that "lifts to
// sigma^1" vs "lifts to sigma^2" is reproducible across runs.
class Covering {
  public:
    Covering();  // builds V by BFS over words in the two generators; throws
                 // std::logic_error if any structural invariant fails

    const GroupTable<18>& valentiner() const { return v_; }
    const GroupTable<6>& a6() const { return a6_; }
    const Perm18& kernel_generator() const { return sigma_; }

    // covering map; throws std::invalid_argument if v is not in V
    Perm6 image_of(const Perm18& v) const;

    // the three preimages of an A6 element
    std::array<Perm18, 3> preimages(const Perm6& a) const;

    // unique order-2 preimage of a double transposition; throws
    // std::invalid_argument if x is not in the class
    Perm18 order2_lift(const Perm6& x) const;

    // e with k = sigma^e; throws std::invalid_argument if k is not in the kernel
    int kernel_exponent(const Perm18& k) const;

  private:
    friend class Universe;
    GroupTable<18> v_;
    GroupTable<6> a6_;
    Perm18 sigma_;
    std::vector<uint16_t> image_id_;            // V element index -> A6 element index
    std::vector<std::array<uint32_t, 3>> pre_;  // A6 element index -> V element indices
};

Covering build_covering();

// Dense tables for A6/S6 arithmetic and the 45-element class.
class Universe {
  public:
    static const Universe& get();

    static constexpr int kA6Order = 360;
    static constexpr int kS6Order = 720;
    static constexpr int kClassSize = 45;

    // A6 element ids (0..359, elements sorted by image array)
    uint16_t a6_index(const Perm6& p) const;
    const Perm6& a6_at(uint16_t id) const { return a6_elems_[id]; }
    uint16_t mul(uint16_t a, uint16_t b) const { return mul_[size_t(a) * kA6Order + b]; }
    uint16_t inv(uint16_t a) const { return inv_[a]; }
    uint16_t identity_id() const { return id_a6_; }

    // S6 element ids (0..719, sorted); A6 embeds with its own indexing
    uint16_t s6_index(const Perm6& p) const;
    const Perm6& s6_at(uint16_t id) const { return s6_elems_[id]; }
    bool s6_is_even(uint16_t id) const { return s6_even_[id]; }

    // class of double transpositions, canonical order:
    // (a,b)(c,d) with a<b, c<d, a<c, sorted lexicographically by (a,b,c,d)
    uint16_t class_elem(uint8_t c) const { return class_elem_[c]; }
    const Perm6& class_perm(uint8_t c) const { return a6_elems_[class_elem_[c]]; }
    int class_of_a6(uint16_t id) const { return class_of_[id]; }  // -1 if not in class
    uint8_t fix_mask(uint8_t c) const { return fix_mask_[c]; }    // 6-bit fixed points

    // class index of s^-1 * x * s for class element x, s in S6
    uint8_t conj_class(uint8_t c, uint16_t s6id) const {
        return conj_class_[size_t(s6id) * kClassSize + c];
    }
    // class index of b^-1 * a * b (both class elements)
    uint8_t braid_conj(uint8_t a, uint8_t b) const { return cc_[size_t(a) * kClassSize + b]; }

    // conjugators sufficient for canonical forms: the S6 elements mapping
    // class element c to class element 0 (8 even ones / 16 in all)
    std::span<const uint16_t> inner_canon_conjs(uint8_t c) const {
        return {inner_canon_[c].data(), inner_canon_[c].size()};
    }
    std::span<const uint16_t> abs_canon_conjs(uint8_t c) const {
        return {abs_canon_[c].data(), abs_canon_[c].size()};
    }

    const Covering& covering() const { return cov_; }
    const Perm18& order2_lift_of_class(uint8_t c) const { return lift2_[c]; }
    const Perm18& sigma() const { return cov_.kernel_generator(); }

    const GroupTable<6>& a6_table() const { return a6_tab_; }
    const GroupTable<6>& s6_table() const { return s6_tab_; }

    // subgroup lattice of A6 (all 501 subgroups), built lazily
    const SubgroupLattice& lattice() const;

  private:
    Universe();

    GroupTable<6> a6_tab_, s6_tab_;
    std::vector<Perm6> a6_elems_, s6_elems_;
    std::vector<uint16_t> mul_, inv_;
    uint16_t id_a6_ = 0;
    std::vector<bool> s6_even_;
    std::array<uint16_t, kClassSize> class_elem_{};
    std::array<int16_t, kA6Order> class_of_{};
    std::array<uint8_t, kClassSize> fix_mask_{};
    std::vector<uint8_t> conj_class_;
    std::vector<uint8_t> cc_;
    std::array<std::array<uint16_t, 8>, kClassSize> inner_canon_{};
    std::array<std::array<uint16_t, 16>, kClassSize> abs_canon_{};
    Covering cov_;
    std::array<Perm18, kClassSize> lift2_{};
};

// All subgroups of A6 with order/transitivity flags, an extension table over
// class elements, the longest-chain value, and exact counts of product-one
// class tuples per generated subgroup (used to certify orbit enumerations
// without materializing the tuples).
class SubgroupLattice {
  public:
    explicit SubgroupLattice(const Universe& u);

    int count() const { return int(order_.size()); }
    uint16_t trivial_id() const { return trivial_; }
    uint16_t full_id() const { return full_; }
    uint16_t order_of(uint16_t id) const { return order_[id]; }
    bool transitive(uint16_t id) const { return transitive_[id]; }
    bool closure_validated() const { return validated_; }
    int max_chain() const { return max_chain_; }

    // subgroup generated by (subgroup id) and one more class element
    uint16_t extend(uint16_t id, uint8_t c) const {
        return extend_[size_t(id) * Universe::kClassSize + c];
    }

    // number of product-one tuples of length k with entries in (class ∩ subgroup)
    uint64_t count_class_tuples_in(uint16_t id, int k) const;
    // ... that additionally generate exactly this subgroup
    uint64_t count_generating_tuples(uint16_t id, int k) const;
    // product-one class tuples of length k generating A6 itself
    uint64_t nielsen_count(int k) const { return count_generating_tuples(full_, k); }

    // ids of subgroups H with H = <class ∩ H>, ascending by order
    const std::vector<uint16_t>& class_generated() const { return class_generated_; }
    bool contains_subgroup(uint16_t big, uint16_t small) const;
    const std::vector<uint64_t>& member_bits(uint16_t id) const { return bits_[id]; }

  private:
    const Universe& u_;
    std::vector<std::vector<uint64_t>> bits_;  // 360-bit membership per subgroup
    std::vector<uint16_t> order_;
    std::vector<bool> transitive_;
    std::vector<uint16_t> extend_;
    std::vector<uint16_t> class_generated_;
    uint16_t trivial_ = 0, full_ = 0;
    bool validated_ = false;
    int max_chain_ = 0;
    std::vector<std::vector<uint64_t>> gen_counts_;  // [k][subgroup id], k <= 8
};

}  // namespace hurwitz

#include "hurwitz/a6.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace hurwitz {

namespace {

// A6 inside S6 and the Valentiner group inside S18, by their standard
// generating pairs; the covering map sends generator to generator.
const char* kA6Gen1 = "(1,2)(3,4)";
const char* kA6Gen2 = "(1,2,4,5)(3,6)";
const char* kValGen1 = "(2,6)(4,11)(7,9)(8,13)(10,14)(12,16)";
const char* kValGen2 = "(1,2,7,4)(3,8,6,10)(5,9,13,12)(11,15)(14,17)(16,18)";
// pinned kernel generator: exponents 1 and 2 are labelled relative to this
const char* kSigma = "(1,3,5)(2,8,9)(4,10,12)(6,13,7)(11,14,16)(15,17,18)";

struct P18Hash {
    size_t operator()(const Perm18& p) const {
        uint64_t h = 1469598103934665603ull;
        for (int i = 0; i < 18; ++i) {
            h ^= p.img[i];
            h *= 1099511628211ull;
        }
        return size_t(h);
    }
};

}  // namespace

Covering::Covering() {
    const Perm6 s1 = parse_perm<6>(kA6Gen1);
    const Perm6 s2 = parse_perm<6>(kA6Gen2);
    const Perm18 v1 = parse_perm<18>(kValGen1);
    const Perm18 v2 = parse_perm<18>(kValGen2);

    a6_ = GroupTable<6>::close({s1, s2});
    if (a6_.order() != 360) throw std::logic_error("covering: |A6| != 360");

    // BFS over words in {v1, v2}, evaluating the same word in {s1, s2}.
    // If an element is reached twice, the two images must agree; this checks
    // that the assignment extends to a homomorphism.
    std::unordered_map<Perm18, Perm6, P18Hash> img;
    img.reserve(2200);
    std::vector<Perm18> frontier{Perm18::identity()};
    img[Perm18::identity()] = Perm6::identity();
    const std::array<std::pair<Perm18, Perm6>, 2> gens{{{v1, s1}, {v2, s2}}};
    while (!frontier.empty()) {
        std::vector<Perm18> next;
        for (const auto& g : frontier) {
            const Perm6 gi = img.at(g);
            for (const auto& [h18, h6] : gens) {
                Perm18 e = g * h18;
                Perm6 e6 = gi * h6;
                auto [it, fresh] = img.emplace(e, e6);
                if (fresh)
                    next.push_back(e);
                else if (it->second != e6)
                    throw std::logic_error("covering: image map not well defined");
            }
        }
        frontier.swap(next);
    }
    if (img.size() != 1080) throw std::logic_error("covering: |V| != 1080");

    v_ = GroupTable<18>::close({v1, v2});
    if (v_.order() != 1080) throw std::logic_error("covering: closure disagrees with BFS");

    sigma_ = parse_perm<18>(kSigma);
    if (order(sigma_) != 3) throw std::logic_error("covering: sigma order != 3");

    image_id_.assign(1080, 0);
    pre_.assign(360, {});
    std::array<uint8_t, 360> prec{};
    for (uint32_t vi = 0; vi < 1080; ++vi) {
        const Perm18& e = v_.elements()[vi];
        auto it = img.find(e);
        if (it == img.end()) throw std::logic_error("covering: element without image");
        int ai = a6_.index_of(it->second);
        if (ai < 0) throw std::logic_error("covering: image outside A6");
        image_id_[vi] = uint16_t(ai);
        if (prec[ai] >= 3) throw std::logic_error("covering: more than 3 preimages");
        pre_[ai][prec[ai]++] = vi;
    }
    for (int ai = 0; ai < 360; ++ai)
        if (prec[ai] != 3) throw std::logic_error("covering: fibre size != 3");

    // kernel = fibre over the identity, must be {1, sigma, sigma^2} and central
    const int id6 = a6_.index_of(Perm6::identity());
    const Perm18 sigma2 = sigma_ * sigma_;
    bool seen_id = false, seen_s = false, seen_s2 = false;
    for (uint32_t vi : pre_[id6]) {
        const Perm18& e = v_.elements()[vi];
        if (e.is_identity()) seen_id = true;
        else if (e == sigma_) seen_s = true;
        else if (e == sigma2) seen_s2 = true;
    }
    if (!(seen_id && seen_s && seen_s2))
        throw std::logic_error("covering: kernel differs from <sigma>");
    for (const Perm18& e : v_.elements())
        if (sigma_ * e != e * sigma_)
            throw std::logic_error("covering: sigma not central");
    if (image_of(v1) != s1 || image_of(v2) != s2)
        throw std::logic_error("covering: generator images wrong");
}

Perm6 Covering::image_of(const Perm18& v) const {
    int vi = v_.index_of(v);
    if (vi < 0) throw std::invalid_argument("image_of: not an element of the Valentiner group");
    return a6_.elements()[image_id_[vi]];
}

std::array<Perm18, 3> Covering::preimages(const Perm6& a) const {
    int ai = a6_.index_of(a);
    if (ai < 0) throw std::invalid_argument("preimages: not an element of A6");
    return {v_.elements()[pre_[ai][0]], v_.elements()[pre_[ai][1]], v_.elements()[pre_[ai][2]]};
}

Perm18 Covering::order2_lift(const Perm6& x) const {
    // cycle type 2+2: exactly two fixed points and order 2
    if (order(x) != 2 || __builtin_popcount(fixed_points(x)) != 2)
        throw std::invalid_argument("order2_lift: element is not a double transposition");
    const Perm18* found = nullptr;
    for (const Perm18& cand : preimages(x)) {
        if (order(cand) == 2) {
            if (found) throw std::logic_error("order2_lift: order-2 preimage not unique");
            found = &cand;
        }
    }
    if (!found) throw std::logic_error("order2_lift: no order-2 preimage");
    return *found;
}

int Covering::kernel_exponent(const Perm18& k) const {
    if (k.is_identity()) return 0;
    if (k == sigma_) return 1;
    if (k == sigma_ * sigma_) return 2;
    throw std::invalid_argument("kernel_exponent: not in the kernel");
}

Covering build_covering() { return Covering(); }

Universe::Universe() : cov_() {
    a6_tab_ = cov_.a6();
    a6_elems_ = a6_tab_.elements();
    s6_tab_ = GroupTable<6>::close({parse_perm<6>("(1,2)"), parse_perm<6>("(1,2,3,4,5,6)")});
    if (s6_tab_.order() != 720) throw std::logic_error("universe: |S6| != 720");
    s6_elems_ = s6_tab_.elements();

    mul_.resize(size_t(kA6Order) * kA6Order);
    inv_.resize(kA6Order);
    for (int i = 0; i < kA6Order; ++i) {
        inv_[i] = uint16_t(a6_tab_.index_of(a6_elems_[i].inverse()));
        for (int j = 0; j < kA6Order; ++j)
            mul_[size_t(i) * kA6Order + j] = uint16_t(a6_tab_.index_of(a6_elems_[i] * a6_elems_[j]));
    }
    id_a6_ = uint16_t(a6_tab_.index_of(Perm6::identity()));

    s6_even_.resize(kS6Order);
    for (int i = 0; i < kS6Order; ++i) s6_even_[i] = (parity(s6_elems_[i]) == Parity::even);

    // class order: (a,b)(c,d), a<b, c<d, a<c, lexicographic in (a,b,c,d)
    class_of_.fill(-1);
    {
        int k = 0;
        for (int a = 1; a <= 6; ++a)
            for (int b = a + 1; b <= 6; ++b)
                for (int c = a + 1; c <= 6; ++c) {
                    if (c == b) continue;
                    for (int d = c + 1; d <= 6; ++d) {
                        if (d == b) continue;
                        Perm6 p = Perm6::identity();
                        p.img[a - 1] = uint8_t(b - 1);
                        p.img[b - 1] = uint8_t(a - 1);
                        p.img[c - 1] = uint8_t(d - 1);
                        p.img[d - 1] = uint8_t(c - 1);
                        int id = a6_tab_.index_of(p);
                        if (id < 0) throw std::logic_error("universe: class element outside A6");
                        class_elem_[k] = uint16_t(id);
                        class_of_[id] = int16_t(k);
                        fix_mask_[k] = uint8_t(fixed_points(p));
                        ++k;
                    }
                }
        if (k != kClassSize) throw std::logic_error("universe: class size != 45");
    }

    conj_class_.assign(size_t(kS6Order) * kClassSize, 0);
    std::array<uint8_t, kClassSize> inner_cnt{}, abs_cnt{};
    for (int s = 0; s < kS6Order; ++s) {
        for (int c = 0; c < kClassSize; ++c) {
            Perm6 x = conjugate(a6_elems_[class_elem_[c]], s6_elems_[s]);
            int id = a6_tab_.index_of(x);
            int ci = (id >= 0) ? class_of_[id] : -1;
            if (ci < 0) throw std::logic_error("universe: class not closed under conjugation");
            conj_class_[size_t(s) * kClassSize + c] = uint8_t(ci);
            if (ci == 0) {
                if (s6_even_[s]) {
                    if (inner_cnt[c] >= 8) throw std::logic_error("universe: >8 inner canonical conjugators");
                    inner_canon_[c][inner_cnt[c]++] = uint16_t(s);
                }
                if (abs_cnt[c] >= 16) throw std::logic_error("universe: >16 canonical conjugators");
                abs_canon_[c][abs_cnt[c]++] = uint16_t(s);
            }
        }
    }
    for (int c = 0; c < kClassSize; ++c)
        if (inner_cnt[c] != 8 || abs_cnt[c] != 16)
            throw std::logic_error("universe: canonical conjugator counts wrong");

    cc_.assign(size_t(kClassSize) * kClassSize, 0);
    for (int a = 0; a < kClassSize; ++a)
        for (int b = 0; b < kClassSize; ++b) {
            uint16_t prod = mul_[size_t(mul_[size_t(inv_[class_elem_[b]]) * kA6Order + class_elem_[a]]) * kA6Order + class_elem_[b]];
            int ci = class_of_[prod];
            if (ci < 0) throw std::logic_error("universe: class not closed under class conjugation");
            cc_[size_t(a) * kClassSize + b] = uint8_t(ci);
        }

    for (int c = 0; c < kClassSize; ++c) lift2_[c] = cov_.order2_lift(a6_elems_[class_elem_[c]]);
}

uint16_t Universe::a6_index(const Perm6& p) const {
    int i = a6_tab_.index_of(p);
    if (i < 0) throw std::invalid_argument("a6_index: not an element of A6");
    return uint16_t(i);
}

uint16_t Universe::s6_index(const Perm6& p) const {
    int i = s6_tab_.index_of(p);
    if (i < 0) throw std::invalid_argument("s6_index: not an element of S6");
    return uint16_t(i);
}

const Universe& Universe::get() {
    static const Universe u;
    return u;
}

const SubgroupLattice& Universe::lattice() const {
    static const SubgroupLattice lat(*this);
    return lat;
}

}  // namespace hurwitz

// Open-addressing hash set of uint64 keys, linear probing.  Orbit BFS at
// seven branch points holds a few million keys, so the std containers'
// per-node overhead is the limiting factor; this keeps it at 8 bytes/slot.
// Key ~0 is reserved as the empty slot marker (tuple keys never produce it:
// every byte is a class index < 45 or zero padding).
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <vector>

namespace hurwitz {

class U64Set {
  public:
    static constexpr uint64_t kEmpty = ~0ull;

    explicit U64Set(size_t expected = 64) { rehash(capacity_for(expected)); }

    static uint64_t mix(uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    bool contains(uint64_t k) const {
        size_t i = mix(k) & mask_;
        while (true) {
            uint64_t s = slots_[i];
            if (s == k) return true;
            if (s == kEmpty) return false;
            i = (i + 1) & mask_;
        }
    }

    // true if newly inserted
    bool insert(uint64_t k) {
        if (size_ * 10 >= slots_.size() * 7) rehash(slots_.size() * 2);
        size_t i = mix(k) & mask_;
        while (true) {
            uint64_t s = slots_[i];
            if (s == k) return false;
            if (s == kEmpty) {
                slots_[i] = k;
                ++size_;
                return true;
            }
            i = (i + 1) & mask_;
        }
    }

    size_t size() const { return size_; }

    void reserve(size_t expected) {
        size_t want = capacity_for(expected);
        if (want > slots_.size()) rehash(want);
    }

    template <typename F>
    void for_each(F f) const {
        for (uint64_t s : slots_)
            if (s != kEmpty) f(s);
    }

    std::vector<uint64_t> sorted_keys() const;

  private:
    static size_t capacity_for(size_t expected) {
        size_t c = 64;
        while (c * 7 < expected * 10) c *= 2;
        return c;
    }

    void rehash(size_t newcap) {
        std::vector<uint64_t> old;
        old.swap(slots_);
        slots_.assign(newcap, kEmpty);
        mask_ = newcap - 1;
        size_ = 0;
        for (uint64_t s : old)
            if (s != kEmpty) insert(s);
    }

    std::vector<uint64_t> slots_;
    size_t mask_ = 0;
    size_t size_ = 0;
};

inline std::vector<uint64_t> U64Set::sorted_keys() const {
    std::vector<uint64_t> out;
    out.reserve(size_);
    for_each([&](uint64_t k) { out.push_back(k); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hurwitz

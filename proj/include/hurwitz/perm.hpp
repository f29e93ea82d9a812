// Permutations on a small fixed number of points, stored as dense image
// arrays.  Composition is left-to-right: (p*q)(x) = q(p(x)), so products
// transcribe verbatim from computer-algebra conventions.
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

template <int N>
struct Perm {
    static_assert(N >= 1 && N <= 32);
    static constexpr int degree = N;

    std::array<uint8_t, N> img{};  // img[x] = image of point x (0-based)

    static Perm identity() {
        Perm p;
        for (int i = 0; i < N; ++i) p.img[i] = uint8_t(i);
        return p;
    }

    uint8_t operator()(uint8_t x) const { return img[x]; }

    bool is_identity() const {
        for (int i = 0; i < N; ++i)
            if (img[i] != i) return false;
        return true;
    }

    // left-to-right: apply *this first, then q
    friend Perm operator*(const Perm& p, const Perm& q) {
        Perm r;
        for (int i = 0; i < N; ++i) r.img[i] = q.img[p.img[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        for (int i = 0; i < N; ++i) r.img[img[i]] = uint8_t(i);
        return r;
    }

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;
};

using Perm6 = Perm<6>;
using Perm18 = Perm<18>;

// s^-1 * x * s
template <int N>
Perm<N> conjugate(const Perm<N>& x, const Perm<N>& s) {
    Perm<N> r;
    for (int i = 0; i < N; ++i) r.img[s.img[i]] = s.img[x.img[i]];
    return r;
}

template <int N>
int order(const Perm<N>& p) {
    int o = 1;
    Perm<N> q = p;
    while (!q.is_identity()) {
        q = q * p;
        ++o;
    }
    return o;
}

enum class Parity : uint8_t { even = 0, odd = 1 };

template <int N>
Parity parity(const Perm<N>& p) {
    uint32_t seen = 0;
    int transpositions = 0;
    for (int i = 0; i < N; ++i) {
        if (seen & (1u << i)) continue;
        int len = 0, j = i;
        do {
            seen |= 1u << j;
            j = p.img[j];
            ++len;
        } while (j != i);
        transpositions += len - 1;
    }
    return (transpositions & 1) ? Parity::odd : Parity::even;
}

// bitmask of fixed points, bit x set iff p(x) = x
template <int N>
uint32_t fixed_points(const Perm<N>& p) {
    uint32_t m = 0;
    for (int i = 0; i < N; ++i)
        if (p.img[i] == i) m |= 1u << i;
    return m;
}

// Canonical text form: disjoint cycles sorted by least moved point, each
// cycle starting at its least point, 1-based; identity prints "()".
template <int N>
std::string cycle_string(const Perm<N>& p) {
    std::string out;
    uint32_t seen = 0;
    for (int i = 0; i < N; ++i) {
        if ((seen & (1u << i)) || p.img[i] == i) continue;
        out += '(';
        int j = i;
        do {
            if (j != i) out += ',';
            out += std::to_string(j + 1);
            seen |= 1u << j;
            j = p.img[j];
        } while (j != i);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

namespace detail {

inline void skip_ws(std::string_view s, size_t& i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
}

inline int parse_int(std::string_view s, size_t& i) {
    skip_ws(s, i);
    size_t start = i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i == start) throw std::invalid_argument("cycle notation: expected integer");
    return std::stoi(std::string(s.substr(start, i - start)));
}

}  // namespace detail

// Grammar: "(a,b,...)(c,d,...)" with 1-based points; whitespace ignored;
// "()" is the identity.  Throws std::invalid_argument on malformed input,
// points out of range, or repeated points.
template <int N>
Perm<N> parse_perm(std::string_view s) {
    Perm<N> p = Perm<N>::identity();
    uint32_t used = 0;
    size_t i = 0;
    detail::skip_ws(s, i);
    if (i == s.size()) throw std::invalid_argument("cycle notation: empty string");
    bool any = false;
    while (i < s.size()) {
        detail::skip_ws(s, i);
        if (i == s.size()) break;
        if (s[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
        ++i;
        detail::skip_ws(s, i);
        std::vector<int> cyc;
        if (i < s.size() && s[i] == ')') {
            ++i;  // "()": empty cycle, allowed
        } else {
            while (true) {
                int v = detail::parse_int(s, i);
                if (v < 1 || v > N) throw std::invalid_argument("cycle notation: point out of range");
                if (used & (1u << (v - 1))) throw std::invalid_argument("cycle notation: repeated point");
                used |= 1u << (v - 1);
                cyc.push_back(v - 1);
                detail::skip_ws(s, i);
                if (i >= s.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
                if (s[i] == ',') { ++i; continue; }
                if (s[i] == ')') { ++i; break; }
                throw std::invalid_argument("cycle notation: expected ',' or ')'");
            }
        }
        for (size_t c = 0; c < cyc.size(); ++c)
            p.img[cyc[c]] = uint8_t(cyc[(c + 1) % cyc.size()]);
        any = true;
        detail::skip_ws(s, i);
    }
    if (!any) throw std::invalid_argument("cycle notation: no cycles");
    return p;
}

// Whitespace-separated sequence of permutations in cycle notation.
template <int N>
std::vector<Perm<N>> parse_perm_list(std::string_view s) {
    std::vector<Perm<N>> out;
    size_t i = 0;
    while (true) {
        detail::skip_ws(s, i);
        if (i >= s.size()) break;
        if (s[i] != '(') throw std::invalid_argument("tuple: expected '('");
        // a permutation extends to the last ')' before the next whitespace gap
        size_t start = i;
        int depth = 0;
        size_t end = i;
        while (end < s.size()) {
            char c = s[end];
            if (c == '(') depth++;
            else if (c == ')') depth--;
            else if ((c == ' ' || c == '\t' || c == '\n' || c == '\r') && depth == 0)
                break;
            ++end;
        }
        if (depth != 0) throw std::invalid_argument("tuple: unbalanced parentheses");
        out.push_back(parse_perm<N>(s.substr(start, end - start)));
        i = end;
    }
    if (out.empty()) throw std::invalid_argument("tuple: empty");
    return out;
}

}  // namespace hurwitz

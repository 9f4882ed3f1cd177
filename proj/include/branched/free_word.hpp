#pragma once

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace branched {

/// A word in a free group. Letters are nonzero ints: +(g+1) is generator g,
/// -(g+1) its inverse.
using FreeWord = std::vector<int>;

inline int inverse_letter(int x) { return -x; }

inline FreeWord inverse_word(const FreeWord& w) {
    FreeWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

/// Free reduction: cancels adjacent x, x^-1 pairs.
inline FreeWord freely_reduce(const FreeWord& w) {
    FreeWord out;
    for (int x : w) {
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

/// Free plus cyclic reduction: also cancels across the wrap-around.
inline FreeWord cyclically_reduce(const FreeWord& w) {
    FreeWord r = freely_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i >= 2 && r[i] == -r[j - 1]) {
        ++i;
        --j;
    }
    return FreeWord(r.begin() + static_cast<long>(i), r.begin() + static_cast<long>(j));
}

inline bool is_cyclically_reduced(const FreeWord& w) {
    if (w.empty()) return true;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[(i + 1) % w.size()] == -w[i]) return false;
    return true;
}

template <typename T>
inline std::vector<T> rotate_word(const std::vector<T>& w, std::size_t r) {
    std::vector<T> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + r) % w.size()];
    return out;
}

/// Lexicographically minimal rotation; used as the canonical representative
/// of a cyclic word.
template <typename T>
inline std::vector<T> min_rotation(const std::vector<T>& w) {
    if (w.empty()) return w;
    std::vector<T> best = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
        std::vector<T> cand = rotate_word(w, r);
        if (cand < best) best = cand;
    }
    return best;
}

/// Equality of cyclic words up to rotation, optionally also up to inversion.
/// Both inputs must be cyclically reduced.
inline bool cyclic_equal(const FreeWord& w1, const FreeWord& w2, bool allow_inversion) {
    if (w1.size() != w2.size()) return false;
    if (w1.empty()) return true;
    const FreeWord a = min_rotation(w1);
    if (a == min_rotation(w2)) return true;
    if (allow_inversion && a == min_rotation(inverse_word(w2))) return true;
    return false;
}

/// Smallest period p of w as a cyclic word (rotation by p fixes w); p always
/// divides the length.
template <typename T>
inline std::size_t cyclic_period(const std::vector<T>& w) {
    const std::size_t n = w.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = (w[i] == w[(i + p) % n]);
        if (ok) return p;
    }
    return n == 0 ? 0 : n;
}

/// Maximal k >= 2 and primitive root with w ~ root^k as cyclic words, or
/// nullopt when w is not a proper power. Input must be cyclically reduced.
inline std::optional<std::pair<FreeWord, int>> is_proper_power(const FreeWord& w) {
    if (w.empty()) return std::nullopt;
    const std::size_t p = cyclic_period(w);
    if (p == w.size()) return std::nullopt;
    FreeWord root(w.begin(), w.begin() + static_cast<long>(p));
    return std::make_pair(root, static_cast<int>(w.size() / p));
}

/// Renders a word with 'a'..'z' generators and 'A'..'Z' inverses.
inline std::string word_to_string(const FreeWord& w) {
    std::string s;
    s.reserve(w.size());
    for (int x : w) {
        const int g = std::abs(x) - 1;
        s.push_back(static_cast<char>((x > 0 ? 'a' : 'A') + g));
    }
    return s;
}

/// Parses a word over the first `rank` lowercase letters (uppercase =
/// inverse). Returns nullopt on a bad character.
inline std::optional<FreeWord> word_from_string(const std::string& s, int rank) {
    FreeWord w;
    w.reserve(s.size());
    for (char c : s) {
        if (c >= 'a' && c < 'a' + rank)
            w.push_back(c - 'a' + 1);
        else if (c >= 'A' && c < 'A' + rank)
            w.push_back(-(c - 'A' + 1));
        else
            return std::nullopt;
    }
    return w;
}

}  // namespace branched

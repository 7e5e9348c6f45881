#pragma once

// Reference computations used to freeze expected values in the test suite.
// Everything in this header is written from first principles (digit
// arithmetic, explicit permutation arrays, brute-force search, union-find)
// and deliberately shares no code with the library under test.

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// ---------------------------------------------------------------------------
// digit arithmetic for the one-state adding/subtracting machines
// ---------------------------------------------------------------------------

// words are stored least significant digit first
inline long long value_of(const std::vector<int>& digits, int base) {
    long long v = 0;
    for (std::size_t i = digits.size(); i-- > 0;) v = v * base + digits[i];
    return v;
}

inline std::vector<int> digits_of(long long v, int base, std::size_t len) {
    long long mod = 1;
    for (std::size_t i = 0; i < len; ++i) mod *= base;
    v %= mod;
    if (v < 0) v += mod;
    std::vector<int> d(len);
    for (std::size_t i = 0; i < len; ++i) { d[i] = static_cast<int>(v % base); v /= base; }
    return d;
}

// translate between a letter word and its digit vector via an ordered alphabet
inline std::vector<int> digits_from_word(const std::vector<std::string>& w,
                                         const std::vector<std::string>& alphabet) {
    std::vector<int> d;
    for (const auto& x : w) {
        auto it = std::find(alphabet.begin(), alphabet.end(), x);
        assert(it != alphabet.end());
        d.push_back(static_cast<int>(it - alphabet.begin()));
    }
    return d;
}

inline std::vector<std::string> word_from_digits(const std::vector<int>& d,
                                                 const std::vector<std::string>& alphabet) {
    std::vector<std::string> w;
    for (int x : d) w.push_back(alphabet.at(static_cast<std::size_t>(x)));
    return w;
}

// the machine realizing v -> v + m on fixed-length strings, least significant
// digit first, wrapping modulo base^len
inline std::vector<int> odometer_add(const std::vector<int>& d, long long m, int base) {
    return digits_of(value_of(d, base) + m, base, d.size());
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// restriction exponents, one closed form per shipped one-state machine:
// the power a^m of the adding machine restricts at digit d to a^((d+m) div 2)
inline long long adding_restriction(long long m, int d) { return floor_div(d + m, 2); }
// the binary subtraction machine: a^m realizes v -> v - m
inline long long bs12_restriction(long long m, int d) { return -floor_div(d - m, 2); }

// the ternary machine with a . d = d + 1 mod 3 and restriction a exactly on
// digits 0 and 1, so that a^3 restricts to a^2 everywhere; the exponent is
// walked step by step around the digit cycle
inline long long bs23_restriction(long long m, int d) {
    long long e = 0;
    int cur = d;
    for (long long i = 0; i < m; ++i) {
        e += (cur != 2);
        cur = (cur + 1) % 3;
    }
    for (long long i = 0; i > m; --i) {
        cur = (cur + 2) % 3;
        e -= (cur != 2);
    }
    return e;
}

// one application of that machine (or of its inverse) to a digit string
inline std::vector<int> bs23_step(std::vector<int> d, bool invert) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!invert) {
            int old = d[i];
            d[i] = (old + 1) % 3;
            if (old == 2) break;  // restriction 1 stops the carry
        } else {
            d[i] = (d[i] + 2) % 3;
            if (d[i] == 2) break;
        }
    }
    return d;
}

inline std::vector<int> bs23_act_pow(std::vector<int> d, long long m) {
    for (long long i = 0; i < m; ++i) d = bs23_step(d, false);
    for (long long i = 0; i > m; --i) d = bs23_step(d, true);
    return d;
}

// ---------------------------------------------------------------------------
// affine maps x -> mul*x + add over the integers; composition is rightmost
// first, matching the convention (gh)(x) = g(h(x))
// ---------------------------------------------------------------------------

struct affine {
    long long mul = 1, add = 0;
    friend bool operator==(const affine&, const affine&) = default;
};

inline affine compose(const affine& f, const affine& g) {
    return {f.mul * g.mul, f.mul * g.add + f.add};
}

// token string over {a, a^-1 is not needed, t}: evaluates a -> x+1, t -> 2x.
// tokens are applied rightmost first.
inline affine affine_of_tokens(const std::vector<std::string>& tokens) {
    affine acc;
    for (std::size_t i = tokens.size(); i-- > 0;) {
        const std::string& tk = tokens[i];
        affine f;
        if (tk == "t") f = {2, 0};
        else if (tk == "a") f = {1, 1};
        else if (tk.rfind("a^", 0) == 0) f = {1, std::stoll(tk.substr(2))};
        else assert(false);
        acc = compose(f, acc);
    }
    return acc;
}

// affine maps x -> 2^e * x + n / 2^q over the dyadic rationals.  the group
// generated by x+1 and 2x is exactly Z[1/2] semidirect Z, so equality of
// composites decides word equality in the group presented by a^2 t = t a.
struct dyadic_affine {
    int e = 0;         // scale exponent
    long long n = 0;   // translation numerator
    int q = 0;         // translation denominator exponent, kept minimal
    friend bool operator==(const dyadic_affine&, const dyadic_affine&) = default;
};

inline dyadic_affine dyadic_normalize(dyadic_affine f) {
    while (f.q > 0 && f.n % 2 == 0) {
        f.n /= 2;
        --f.q;
    }
    if (f.n == 0) f.q = 0;
    return f;
}

inline dyadic_affine compose(const dyadic_affine& f, const dyadic_affine& g) {
    // f(g(x)) = 2^(ef+eg) x + 2^ef ng/2^qg + nf/2^qf
    dyadic_affine h;
    h.e = f.e + g.e;
    long long left_num = g.n, right_num = f.n;
    int left_q = g.q - f.e, right_q = f.q;
    while (left_q < 0) left_num *= 2, ++left_q;
    while (right_q < 0) right_num *= 2, ++right_q;
    int q = std::max(left_q, right_q);
    h.n = (left_num << (q - left_q)) + (right_num << (q - right_q));
    h.q = q;
    return dyadic_normalize(h);
}

// letters: a -> x+1, A -> x-1, t -> 2x, T -> x/2; rightmost applied first
inline dyadic_affine dyadic_of_letters(const std::string& w) {
    dyadic_affine acc;
    for (std::size_t i = w.size(); i-- > 0;) {
        dyadic_affine f;
        switch (w[i]) {
            case 'a': f = {0, 1, 0}; break;
            case 'A': f = {0, -1, 0}; break;
            case 't': f = {1, 0, 0}; break;
            case 'T': f = {-1, 0, 0}; break;
            default: assert(false);
        }
        acc = compose(f, acc);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// recursive evaluator for the Grigorchuk machine
// ---------------------------------------------------------------------------

// states: '1' identity, 'a' swap, 'b', 'c', 'd' with the standard recursion
inline std::string grig_act(char state, const std::string& w) {
    if (w.empty()) return w;
    char head = w[0];
    std::string tail = w.substr(1);
    switch (state) {
        case '1': return w;
        case 'a': return std::string(1, head == '0' ? '1' : '0') + tail;
        case 'b': return head == '0' ? "0" + grig_act('a', tail) : "1" + grig_act('c', tail);
        case 'c': return head == '0' ? "0" + grig_act('a', tail) : "1" + grig_act('d', tail);
        case 'd': return head == '0' ? "0" + tail : "1" + grig_act('b', tail);
    }
    assert(false);
    return w;
}

// leftmost token applied last, as for group words
inline std::string grig_act_word(const std::string& states, const std::string& w) {
    std::string cur = w;
    for (std::size_t i = states.size(); i-- > 0;) cur = grig_act(states[i], cur);
    return cur;
}

// ---------------------------------------------------------------------------
// the three-state machine: m_c realizes v -> 3v + c modulo 2^len on binary
// strings over the ordered alphabet {x, y}
// ---------------------------------------------------------------------------

inline std::vector<int> threestate_act(int c, const std::vector<int>& d) {
    return digits_of(3 * value_of(d, 2) + c, 2, d.size());
}

// ---------------------------------------------------------------------------
// the two-vertex relabelling machine: a adds one then relabels digits 0,1 to
// letters x,y; b relabels; c subtracts one after unrelabelling; d unrelabels
// ---------------------------------------------------------------------------

inline std::vector<int> typed_adding_act(char state, const std::vector<int>& d) {
    long long v = value_of(d, 2);
    switch (state) {
        case 'a': return digits_of(v + 1, 2, d.size());
        case 'b': return d;
        case 'c': return digits_of(v - 1, 2, d.size());
        case 'd': return d;
    }
    assert(false);
    return d;
}

// ---------------------------------------------------------------------------
// partial injections on {0,...,n-1}; image vector with -1 for undefined
// ---------------------------------------------------------------------------

using pinj = std::vector<int>;

inline pinj pinj_identity(int n) {
    pinj f(static_cast<std::size_t>(n));
    std::iota(f.begin(), f.end(), 0);
    return f;
}

inline pinj pinj_zero(int n) { return pinj(static_cast<std::size_t>(n), -1); }

// f after g
inline pinj pinj_compose(const pinj& f, const pinj& g) {
    pinj h(g.size(), -1);
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] >= 0 && f[static_cast<std::size_t>(g[i])] >= 0)
            h[i] = f[static_cast<std::size_t>(g[i])];
    return h;
}

inline pinj pinj_inverse(const pinj& f) {
    pinj h(f.size(), -1);
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] >= 0) h[static_cast<std::size_t>(f[i])] = static_cast<int>(i);
    return h;
}

inline int pinj_rank(const pinj& f) {
    int r = 0;
    for (int v : f) r += (v >= 0);
    return r;
}

inline int pinj_fixed(const pinj& f) {
    int r = 0;
    for (std::size_t i = 0; i < f.size(); ++i) r += (f[i] == static_cast<int>(i));
    return r;
}

inline bool pinj_idempotent(const pinj& f) { return pinj_compose(f, f) == f; }

// restriction order: f <= g iff f = g on the domain of f
inline bool pinj_leq(const pinj& f, const pinj& g) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] >= 0 && f[i] != g[i]) return false;
    return true;
}

// orthogonal iff domains disjoint and images disjoint
inline bool pinj_orthogonal(const pinj& f, const pinj& g) {
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] >= 0 && g[i] >= 0) return false;
    std::set<int> imf, img;
    for (int v : f) if (v >= 0) imf.insert(v);
    for (int v : g) if (v >= 0) img.insert(v);
    for (int v : imf) if (img.count(v)) return false;
    return true;
}

inline pinj pinj_union(const pinj& f, const pinj& g) {
    pinj h = f;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g[i] >= 0) h[i] = g[i];
    return h;
}

inline std::vector<pinj> all_pinj(int n) {
    std::vector<pinj> out;
    pinj cur(static_cast<std::size_t>(n), -1);
    // backtracking over images, -1 allowed, injective on defined part
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) { out.push_back(cur); return; }
        cur[static_cast<std::size_t>(i)] = -1;
        self(self, i + 1);
        for (int v = 0; v < n; ++v)
            if (!used[static_cast<std::size_t>(v)]) {
                used[static_cast<std::size_t>(v)] = true;
                cur[static_cast<std::size_t>(i)] = v;
                self(self, i + 1);
                used[static_cast<std::size_t>(v)] = false;
            }
        cur[static_cast<std::size_t>(i)] = -1;
    };
    rec(rec, 0);
    return out;
}

// element naming used by the data files: 0 for the empty map, otherwise
// m<domain digits>.<image digits> with one-based points in domain order
inline std::string pinj_name(const pinj& f) {
    std::string dom, img;
    for (std::size_t i = 0; i < f.size(); ++i)
        if (f[i] >= 0) {
            dom += std::to_string(i + 1);
            img += std::to_string(f[i] + 1);
        }
    if (dom.empty()) return "0";
    return "m" + dom + "." + img;
}

// ---------------------------------------------------------------------------
// polycyclic monoid on two generators: elements [u, v] over words in x1, x2
// ---------------------------------------------------------------------------

struct pc2 {
    bool zero = false;
    std::string u, v;  // letter-coded words, each char one of '1' or '2'
    friend bool operator==(const pc2&, const pc2&) = default;
};

inline pc2 pc2_zero() { return {true, "", ""}; }

inline bool is_prefix(const std::string& p, const std::string& w) {
    return w.size() >= p.size() && std::equal(p.begin(), p.end(), w.begin());
}

inline pc2 pc2_mul(const pc2& s, const pc2& t) {
    if (s.zero || t.zero) return pc2_zero();
    if (is_prefix(s.v, t.u)) return {false, s.u + t.u.substr(s.v.size()), t.v};
    if (is_prefix(t.u, s.v)) return {false, s.u, t.v + s.v.substr(t.u.size())};
    return pc2_zero();
}

inline pc2 pc2_inv(const pc2& s) { return s.zero ? s : pc2{false, s.v, s.u}; }

inline bool pc2_leq(const pc2& s, const pc2& t) {
    if (s.zero) return true;
    if (t.zero) return false;
    if (!is_prefix(t.v, s.v)) return false;
    std::string ext = s.v.substr(t.v.size());
    return s.u == t.u + ext;
}

// ---------------------------------------------------------------------------
// permutation realizations of the reflection/rotation systems; restrictions
// in those machines are constant, so words multiply by acting letterwise
// ---------------------------------------------------------------------------

struct perm_system {
    std::vector<std::string> letters;
    // generator name -> image index per letter index
    std::map<std::string, std::vector<int>> gens;

    int letter_index(const std::string& x) const {
        auto it = std::find(letters.begin(), letters.end(), x);
        assert(it != letters.end());
        return static_cast<int>(it - letters.begin());
    }
    // tokens applied rightmost first
    int apply(const std::vector<std::string>& tokens, int i) const {
        for (std::size_t k = tokens.size(); k-- > 0;) i = gens.at(tokens[k])[static_cast<std::size_t>(i)];
        return i;
    }
    std::vector<std::string> act(const std::vector<std::string>& tokens,
                                 const std::vector<std::string>& w) const {
        std::vector<std::string> out;
        for (const auto& x : w)
            out.push_back(letters[static_cast<std::size_t>(apply(tokens, letter_index(x)))]);
        return out;
    }
};

// letters T, L, R in declared order; s swaps L and R, r cycles T->R->L->T
inline perm_system gasket_system() {
    perm_system p;
    p.letters = {"T", "L", "R"};
    p.gens["s"] = {0, 2, 1};
    p.gens["r"] = {2, 0, 1};  // T->R, L->T, R->L
    return p;
}

// letters L1, L2, R1, R2, T, S1, S2, B in declared order
inline perm_system carpet_system() {
    perm_system p;
    p.letters = {"L1", "L2", "R1", "R2", "T", "S1", "S2", "B"};
    auto idx = [&](const std::string& x) { return p.letter_index(x); };
    std::vector<int> s(8), r(8);
    auto set = [&](std::vector<int>& g, const std::string& from, const std::string& to) {
        g[static_cast<std::size_t>(idx(from))] = idx(to);
    };
    set(s, "L1", "R1"); set(s, "L2", "R2"); set(s, "R1", "L1"); set(s, "R2", "L2");
    set(s, "T", "T"); set(s, "S1", "S2"); set(s, "S2", "S1"); set(s, "B", "B");
    set(r, "L1", "R1"); set(r, "L2", "L1"); set(r, "R1", "R2"); set(r, "R2", "L2");
    set(r, "T", "S2"); set(r, "S2", "B"); set(r, "B", "S1"); set(r, "S1", "T");
    p.gens["s"] = s;
    p.gens["r"] = r;
    return p;
}

// Zappa-Szep product for constant-restriction systems:
// (x, g)(y, h) = (x g.y, g h) with the group part kept as a token list
inline std::pair<std::vector<std::string>, std::vector<std::string>>
rees_mul_constant(const perm_system& p,
                  const std::vector<std::string>& x, const std::vector<std::string>& g,
                  const std::vector<std::string>& y, const std::vector<std::string>& h) {
    std::vector<std::string> word = x;
    for (const auto& l : p.act(g, y)) word.push_back(l);
    std::vector<std::string> group = g;
    for (const auto& tk : h) group.push_back(tk);
    return {word, group};
}

// ---------------------------------------------------------------------------
// relation-move classes for the group with presentation t a = a a t:
// union-find over all words of length <= maxlen over a, a^-1, t, t^-1
// (letters a, A, t, T), with free cancellation and the defining rewrite
// ---------------------------------------------------------------------------

class bs12_classes {
  public:
    explicit bs12_classes(std::size_t maxlen = 8) : maxlen_(maxlen) {
        offsets_.assign(maxlen_ + 2, 0);
        for (std::size_t l = 0; l <= maxlen_; ++l)
            offsets_[l + 1] = offsets_[l] + pow4(l);
        parent_.resize(offsets_[maxlen_ + 1]);
        std::iota(parent_.begin(), parent_.end(), 0);
        std::string w;
        enumerate(w);
    }

    bool equivalent(const std::string& w1, const std::string& w2) {
        return find(index_of(w1)) == find(index_of(w2));
    }

  private:
    static std::size_t pow4(std::size_t l) {
        std::size_t p = 1;
        while (l--) p *= 4;
        return p;
    }
    static int code(char c) {
        switch (c) { case 'a': return 0; case 'A': return 1; case 't': return 2; case 'T': return 3; }
        assert(false);
        return 0;
    }
    std::size_t index_of(const std::string& w) const {
        assert(w.size() <= maxlen_);
        std::size_t v = 0;
        for (char c : w) v = v * 4 + static_cast<std::size_t>(code(c));
        return offsets_[w.size()] + v;
    }
    std::size_t find(std::size_t i) {
        while (parent_[i] != i) { parent_[i] = parent_[parent_[i]]; i = parent_[i]; }
        return i;
    }
    void unite(std::size_t i, std::size_t j) {
        i = find(i); j = find(j);
        if (i != j) parent_[i] = j;
    }
    static bool cancels(char x, char y) {
        return (x == 'a' && y == 'A') || (x == 'A' && y == 'a') ||
               (x == 't' && y == 'T') || (x == 'T' && y == 't');
    }
    void visit(const std::string& w) {
        std::size_t me = index_of(w);
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (cancels(w[i], w[i + 1]))
                unite(me, index_of(w.substr(0, i) + w.substr(i + 2)));
            if (w[i] == 't' && w[i + 1] == 'a' && w.size() + 1 <= maxlen_)
                unite(me, index_of(w.substr(0, i) + "aat" + w.substr(i + 2)));
        }
        for (std::size_t i = 0; i + 2 < w.size(); ++i)
            if (w.compare(i, 3, "aat") == 0)
                unite(me, index_of(w.substr(0, i) + "ta" + w.substr(i + 3)));
    }
    void enumerate(std::string& w) {
        visit(w);
        if (w.size() == maxlen_) return;
        for (char c : {'a', 'A', 't', 'T'}) {
            w.push_back(c);
            enumerate(w);
            w.pop_back();
        }
    }

    std::size_t maxlen_;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> parent_;
};

// ---------------------------------------------------------------------------
// small exact determinant (fraction-free elimination) for certificate checks
// ---------------------------------------------------------------------------

inline long long det_small(std::vector<std::vector<long long>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    long long prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) { std::swap(m[piv], m[k]); sign = -sign; }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                __int128 t = (__int128)m[i][j] * m[k][k] - (__int128)m[i][k] * m[k][j];
                m[i][j] = static_cast<long long>(t / prev);
            }
        prev = m[k][k];
    }
    // after fraction-free elimination the last pivot is the determinant up to sign
    return sign * m[n - 1][n - 1];
}

// ---------------------------------------------------------------------------
// word enumeration helper
// ---------------------------------------------------------------------------

inline std::vector<std::vector<std::string>>
words_up_to(const std::vector<std::string>& letters, std::size_t maxlen) {
    std::vector<std::vector<std::string>> out{{}};
    std::size_t start = 0;
    for (std::size_t l = 1; l <= maxlen; ++l) {
        std::size_t end = out.size();
        for (std::size_t i = start; i < end; ++i)
            for (const auto& x : letters) {
                auto w = out[i];
                w.push_back(x);
                out.push_back(std::move(w));
            }
        start = end;
    }
    return out;
}

}  // namespace oracle

#include "rlz/baselines.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

namespace rlz {

namespace {

// below these sizes the quadratic definitional versions run directly;
// above, the suffix-array variants take over (cross-checked in tests)
constexpr size_t BWT_NAIVE_MAX = 2048;
constexpr size_t LZ_NAIVE_MAX = 2048;

} // namespace

byte_string wrap_text(const byte_string& raw) {
    for (size_t i = 0; i < raw.size(); ++i)
        if (raw[i] <= LZ_TERM) throw alphabet_error(i, raw[i]);
    byte_string t;
    t.reserve(raw.size() + 2);
    t.push_back(BWT_TERM);
    t.insert(t.end(), raw.begin(), raw.end());
    t.push_back(LZ_TERM);
    return t;
}

std::vector<size_t> suffix_array(const byte_string& s) {
    size_t n = s.size();
    std::vector<size_t> sa(n), rnk(n), tmp(n);
    std::iota(sa.begin(), sa.end(), size_t{0});
    for (size_t i = 0; i < n; ++i) rnk[i] = s[i];
    if (n <= 1) return sa;
    for (size_t k = 1;; k *= 2) {
        auto cmp = [&](size_t a, size_t b) {
            if (rnk[a] != rnk[b]) return rnk[a] < rnk[b];
            size_t ra = a + k < n ? rnk[a + k] + 1 : 0;
            size_t rb = b + k < n ? rnk[b + k] + 1 : 0;
            return ra < rb;
        };
        std::sort(sa.begin(), sa.end(), cmp);
        tmp[sa[0]] = 0;
        for (size_t i = 1; i < n; ++i)
            tmp[sa[i]] = tmp[sa[i - 1]] + (cmp(sa[i - 1], sa[i]) ? 1 : 0);
        rnk = tmp;
        if (rnk[sa[n - 1]] == n - 1) break;
    }
    return sa;
}

byte_string bwt_by_rotation_sort(const byte_string& t) {
    size_t n = t.size();
    std::vector<size_t> rot(n);
    std::iota(rot.begin(), rot.end(), size_t{0});
    std::sort(rot.begin(), rot.end(), [&](size_t a, size_t b) {
        for (size_t k = 0; k < n; ++k) {
            symbol ca = t[(a + k) % n];
            symbol cb = t[(b + k) % n];
            if (ca != cb) return ca < cb;
        }
        return false;
    });
    byte_string out(n);
    for (size_t i = 0; i < n; ++i) out[i] = t[(rot[i] + n - 1) % n];
    return out;
}

byte_string bwt_by_suffix_array(const byte_string& t) {
    size_t n = t.size();
    auto sa = suffix_array(t);
    byte_string out(n);
    for (size_t i = 0; i < n; ++i) out[i] = sa[i] == 0 ? t[n - 1] : t[sa[i] - 1];
    return out;
}

byte_string naive_bwt(const byte_string& t) {
    if (t.empty()) return {};
    return t.size() <= BWT_NAIVE_MAX ? bwt_by_rotation_sort(t) : bwt_by_suffix_array(t);
}

rlbwt_runs naive_rlbwt(const byte_string& t) {
    byte_string bwt = naive_bwt(t);
    rlbwt_runs out;
    for (size_t i = 0; i < bwt.size();) {
        size_t j = i;
        while (j < bwt.size() && bwt[j] == bwt[i]) ++j;
        out.runs.emplace_back(j - i, bwt[i]);
        i = j;
    }
    return out;
}

lz77_parse lz77_quadratic(const byte_string& t) {
    size_t n = t.size();
    lz77_parse out;
    size_t i = 0;
    while (i < n) {
        size_t best_len = 0, best_src = 0;
        for (size_t p = 0; p < i; ++p) {
            size_t l = 0;
            while (l < n - i - 1 && t[p + l] == t[i + l]) ++l;
            if (l > best_len) {
                best_len = l;
                best_src = p;
            }
        }
        if (best_len == 0)
            out.phrases.push_back({lz77_phrase::null_src, 0, t[i]});
        else
            out.phrases.push_back({best_src, best_len, t[i + best_len]});
        i += best_len + 1;
    }
    return out;
}

lz77_parse lz77_by_lpf(const byte_string& t) {
    size_t n = t.size();
    lz77_parse out;
    if (n == 0) return out;

    auto sa = suffix_array(t);
    std::vector<size_t> rnk(n), lcp(n, 0);
    for (size_t i = 0; i < n; ++i) rnk[sa[i]] = i;
    // Kasai: lcp[i] = lcp(suffix sa[i-1], suffix sa[i])
    for (size_t p = 0, h = 0; p < n; ++p) {
        if (rnk[p] == 0) {
            h = 0;
            continue;
        }
        size_t q = sa[rnk[p] - 1];
        while (p + h < n && q + h < n && t[p + h] == t[q + h]) ++h;
        lcp[rnk[p]] = h;
        if (h) --h;
    }

    // longest previous factor with a source, via the stack sweep over
    // the suffix array: each stack entry stores its lcp with the entry
    // below; a pop compares that with the lcp to the incoming suffix
    std::vector<size_t> lpf(n, 0);
    std::vector<uint64_t> src(n, lz77_phrase::null_src);
    std::vector<std::pair<size_t, size_t>> st; // (text position, lcp with below)
    for (size_t i = 0; i <= n; ++i) {
        size_t cur = i < n ? lcp[i] : 0;
        long pos = i < n ? static_cast<long>(sa[i]) : -1;
        while (!st.empty() && static_cast<long>(st.back().first) > pos) {
            auto [v, l] = st.back();
            st.pop_back();
            size_t left = st.empty() ? 0 : l;
            if (left >= cur) {
                lpf[v] = left;
                if (left > 0) src[v] = st.back().first;
            } else {
                lpf[v] = cur;
                src[v] = static_cast<size_t>(pos);
            }
            cur = std::min(cur, l);
        }
        if (i < n) st.push_back({sa[i], cur});
    }

    size_t i = 0;
    while (i < n) {
        size_t len = std::min(lpf[i], n - 1 - i); // keep a trailing character
        if (len == 0)
            out.phrases.push_back({lz77_phrase::null_src, 0, t[i]});
        else
            out.phrases.push_back({src[i], len, t[i + len]});
        i += len + 1;
    }
    return out;
}

lz77_parse naive_lz77(const byte_string& t) {
    return t.size() <= LZ_NAIVE_MAX ? lz77_quadratic(t) : lz77_by_lpf(t);
}

byte_string lz77_decode(const lz77_parse& parse) {
    byte_string out;
    for (auto& p : parse.phrases) {
        if (p.len > 0) {
            if (p.src >= out.size())
                throw validation_error("lz77 decode: source references unwritten text");
            for (uint64_t k = 0; k < p.len; ++k)
                out.push_back(out[static_cast<size_t>(p.src + k)]);
        } else if (p.src != lz77_phrase::null_src) {
            throw validation_error("lz77 decode: empty phrase with a source");
        }
        out.push_back(p.trail);
    }
    return out;
}

byte_string rlbwt_decode(const rlbwt_runs& runs) {
    byte_string bwt;
    for (auto [len, c] : runs.runs) bwt.insert(bwt.end(), static_cast<size_t>(len), c);
    size_t n = bwt.size();
    if (n == 0) return {};

    std::array<size_t, 256> cnt{};
    for (symbol c : bwt) ++cnt[c];
    if (cnt[BWT_TERM] != 1) throw format_error("rlbwt decode: expected exactly one '#'");

    std::array<size_t, 256> c_arr{};
    for (size_t c = 1, acc = cnt[0]; c < 256; acc += cnt[c], ++c) c_arr[c] = acc;

    std::vector<size_t> lf(n);
    std::array<size_t, 256> seen{};
    for (size_t i = 0; i < n; ++i) lf[i] = c_arr[bwt[i]] + seen[bwt[i]]++;

    // row 0 is the rotation starting with '#', i.e. the text itself
    byte_string t(n);
    size_t row = 0;
    for (size_t k = n; k-- > 0;) {
        t[k] = bwt[row];
        row = lf[row];
    }
    return t;
}

corpus_kind parse_corpus_kind(const std::string& name) {
    if (name == "random") return corpus_kind::random_bytes;
    if (name == "periodic") return corpus_kind::periodic;
    if (name == "fibonacci") return corpus_kind::fibonacci;
    if (name == "mutated-repeats") return corpus_kind::mutated_repeats;
    throw std::invalid_argument("unknown corpus kind: " + name);
}

std::string corpus_kind_name(corpus_kind kind) {
    switch (kind) {
    case corpus_kind::random_bytes: return "random";
    case corpus_kind::periodic: return "periodic";
    case corpus_kind::fibonacci: return "fibonacci";
    case corpus_kind::mutated_repeats: return "mutated-repeats";
    }
    return "?";
}

byte_string gen_corpus(corpus_kind kind, size_t size, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> byte_dist(0x02, 0xff);
    byte_string out;
    out.reserve(size);

    switch (kind) {
    case corpus_kind::random_bytes:
        for (size_t i = 0; i < size; ++i)
            out.push_back(static_cast<symbol>(byte_dist(rng)));
        break;

    case corpus_kind::periodic:
        for (size_t i = 0; i < size; ++i)
            out.push_back(i % 2 == 0 ? 'a' : 'b');
        break;

    case corpus_kind::fibonacci: {
        if (size == 0) break;
        byte_string w = {'a'};
        while (w.size() < size) {
            byte_string next;
            next.reserve(2 * w.size());
            for (symbol c : w) {
                if (c == 'a') {
                    next.push_back('a');
                    next.push_back('b');
                } else {
                    next.push_back('a');
                }
            }
            w = std::move(next);
        }
        out.assign(w.begin(), w.begin() + static_cast<long>(size));
        break;
    }

    case corpus_kind::mutated_repeats: {
        if (size == 0) break;
        size_t block_len = std::max<size_t>(1, std::min<size_t>(64, size / 16 + 1));
        byte_string block(block_len);
        for (auto& b : block) b = static_cast<symbol>(byte_dist(rng));
        for (size_t i = 0; i < size; ++i) out.push_back(block[i % block_len]);
        size_t mutations = size / 100;
        std::uniform_int_distribution<size_t> pos_dist(0, size - 1);
        for (size_t m = 0; m < mutations; ++m)
            out[pos_dist(rng)] = static_cast<symbol>(byte_dist(rng));
        break;
    }
    }
    return out;
}

} // namespace rlz

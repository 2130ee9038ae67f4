/*
 * types.hpp
 *
 * Serializable compressed representations: the run-length encoded BWT
 * as a list of (length, symbol) pairs and the LZ77 parse as a list of
 * (source, length, trailing symbol) triples.
 */

#ifndef RLZ_TYPES_HPP_
#define RLZ_TYPES_HPP_

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "rlz/common.hpp"

namespace rlz {

struct rlbwt_runs {
    // (run length, symbol), in BWT order
    std::vector<std::pair<uint64_t, symbol>> runs;

    size_t text_length() const {
        size_t n = 0;
        for (auto& [len, c] : runs) n += static_cast<size_t>(len);
        return n;
    }

    // throws validation_error unless this is a well-formed RLBWT of a
    // terminator-wrapped text
    void validate() const {
        size_t bwt_terms = 0, lz_terms = 0;
        for (size_t i = 0; i < runs.size(); ++i) {
            auto [len, c] = runs[i];
            if (len == 0) throw validation_error("rlbwt: zero-length run");
            if (i > 0 && runs[i - 1].second == c)
                throw validation_error("rlbwt: adjacent runs with equal symbol");
            if (c == BWT_TERM) {
                if (len != 1) throw validation_error("rlbwt: '#' run longer than 1");
                ++bwt_terms;
            }
            if (c == LZ_TERM) lz_terms += static_cast<size_t>(len);
        }
        if (bwt_terms != 1) throw validation_error("rlbwt: expected exactly one '#'");
        if (lz_terms != 1) throw validation_error("rlbwt: expected exactly one '$'");
    }

    bool operator==(const rlbwt_runs&) const = default;
};

struct lz77_phrase {
    static constexpr uint64_t null_src = std::numeric_limits<uint64_t>::max();

    uint64_t src;  // text position copied from, or null_src
    uint64_t len;  // copied length (0 for a bare literal)
    symbol trail;  // trailing character

    bool operator==(const lz77_phrase&) const = default;
};

struct lz77_parse {
    std::vector<lz77_phrase> phrases;

    size_t text_length() const {
        size_t n = 0;
        for (auto& p : phrases) n += static_cast<size_t>(p.len) + 1;
        return n;
    }

    void validate() const {
        size_t pos = 0;
        for (auto& p : phrases) {
            if ((p.len == 0) != (p.src == lz77_phrase::null_src))
                throw validation_error("lz77: length 0 iff source is null");
            if (p.src != lz77_phrase::null_src && p.src >= pos)
                throw validation_error("lz77: source does not precede phrase");
            pos += static_cast<size_t>(p.len) + 1;
        }
    }

    bool operator==(const lz77_parse&) const = default;
};

} // namespace rlz

#endif // RLZ_TYPES_HPP_

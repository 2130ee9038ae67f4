/*
 * rlbwt_index.hpp
 *
 * Run-length BWT data structure with online extension. The BWT last
 * column L is stored run-length compressed; the terminator '#' is kept
 * virtually (its row is a separate field), so extend() moves it without
 * rewriting runs. All queries behave as if '#' were materialized in L.
 *
 * extend() turns the index of BWT(reverse P) into BWT(reverse P·a) and
 * returns the row where '#' landed, which is the row of the new
 * reversed prefix among the sorted rotations.
 */

#ifndef RLZ_RLBWT_INDEX_HPP_
#define RLZ_RLBWT_INDEX_HPP_

#include <cassert>
#include <stdexcept>

#include "rlz/common.hpp"
#include "rlz/run_length_string.hpp"
#include "rlz/types.hpp"

namespace rlz {

class rlbwt_index {
public:
    struct extend_result {
        size_t row;                          // where '#' was inserted
        size_t rls_pos;                      // where the new symbol landed in the stored runs
        run_length_string::insert_event ev;  // how the run structure changed
    };

    // the index of the empty text: L = "#"
    rlbwt_index() = default;

    static rlbwt_index from_runs(const rlbwt_runs& input) {
        input.validate();
        rlbwt_index idx;
        size_t row = 0;
        for (auto [len, c] : input.runs) {
            if (c == BWT_TERM) {
                idx.term_row_ = row;
                row += 1;
                continue;
            }
            for (uint64_t i = 0; i < len; ++i)
                idx.bwt_.insert(idx.bwt_.size(), c);
            row += static_cast<size_t>(len);
        }
        return idx;
    }

    rlbwt_runs to_runs() const {
        rlbwt_runs out;
        size_t term = term_row_; // '#' goes between stored positions term-1 and term
        for (size_t k = 0; k < bwt_.runs(); ++k) {
            auto rv = bwt_.run_at(k);
            if (term >= rv.start && term < rv.start + rv.length) {
                uint64_t left = term - rv.start;
                if (left > 0) out.runs.emplace_back(left, rv.sym);
                out.runs.emplace_back(1, BWT_TERM);
                out.runs.emplace_back(rv.length - left, rv.sym);
            } else {
                out.runs.emplace_back(rv.length, rv.sym);
            }
        }
        if (term == bwt_.size()) out.runs.emplace_back(1, BWT_TERM);
        return out;
    }

    // total length including '#'
    size_t size() const { return bwt_.size() + 1; }

    size_t term_row() const { return term_row_; }

    // runs of L with the virtual '#' spliced in
    size_t runs() const {
        if (bwt_.size() == 0) return 1;
        if (term_row_ == 0 || term_row_ == bwt_.size()) return bwt_.runs() + 1;
        auto rv = bwt_.run_containing(term_row_ - 1);
        bool splits = term_row_ < rv.start + rv.length;
        return bwt_.runs() + (splits ? 2 : 1);
    }

    size_t count(symbol c) const {
        return c == BWT_TERM ? 1 : bwt_.count(c);
    }

    symbol access(size_t row) const {
        if (row >= size()) throw std::out_of_range("rlbwt_index::access");
        if (row == term_row_) return BWT_TERM;
        return bwt_.access(row - (row > term_row_ ? 1 : 0));
    }

    // occurrences of c in L strictly before row
    size_t rank(symbol c, size_t row) const {
        if (row > size()) throw std::out_of_range("rlbwt_index::rank");
        if (c == BWT_TERM) return row > term_row_ ? 1 : 0;
        return bwt_.rank(c, row - (row > term_row_ ? 1 : 0));
    }

    size_t select(symbol c, size_t k) const {
        if (c == BWT_TERM) {
            if (k != 0) throw std::out_of_range("rlbwt_index::select");
            return term_row_;
        }
        size_t p = bwt_.select(c, k);
        return p + (p >= term_row_ ? 1 : 0);
    }

    // number of symbols in L strictly smaller than c ('#' included)
    size_t c_array(symbol c) const {
        if (c == BWT_TERM) return 0;
        size_t acc = 1;
        for (unsigned b = 1; b < c; ++b) acc += bwt_.count(static_cast<symbol>(b));
        return acc;
    }

    // symbol the row's rotation starts with (F column)
    symbol f_access(size_t row) const {
        if (row >= size()) throw std::out_of_range("rlbwt_index::f_access");
        if (row == 0) return BWT_TERM;
        size_t cum = 1;
        for (unsigned c = 1; c < 256; ++c) {
            cum += bwt_.count(static_cast<symbol>(c));
            if (row < cum) return static_cast<symbol>(c);
        }
        throw std::logic_error("rlbwt_index: inconsistent totals");
    }

    // row of the left-rotation (one text position earlier in the
    // indexed string)
    size_t lf(size_t row) const {
        symbol c = access(row);
        return c_array(c) + rank(c, row);
    }

    // inverse of lf
    size_t fl(size_t row) const {
        symbol c = f_access(row);
        return select(c, row - c_array(c));
    }

    // [lo, hi) is the row interval of some string W; returns the
    // interval of cW (empty iff cW does not occur)
    std::pair<size_t, size_t> backward_step(size_t lo, size_t hi, symbol c) const {
        if (lo > hi || hi > size()) throw std::out_of_range("rlbwt_index::backward_step");
        size_t base = c_array(c);
        return {base + rank(c, lo), base + rank(c, hi)};
    }

    // insert symbol a; the index of BWT(reverse P) becomes the index of
    // BWT(reverse P·a)
    extend_result extend(symbol a) {
        if (a == BWT_TERM) throw std::invalid_argument("rlbwt_index::extend: '#'");
        size_t p = term_row_;
        auto ev = bwt_.insert(p, a);
        size_t l = c_array(a) + bwt_.rank(a, p);
        term_row_ = l;
        return {l, p, ev};
    }

    // streams the indexed text in forward order via FL steps, starting
    // from the row whose rotation begins with '#'
    class forward_extractor {
    public:
        explicit forward_extractor(const rlbwt_index& idx)
            : idx_(idx), row_(0), remaining_(idx.size()) {}

        bool has_next() const { return remaining_ > 0; }

        symbol next() {
            assert(remaining_ > 0);
            symbol c = idx_.f_access(row_);
            row_ = idx_.fl(row_);
            --remaining_;
            return c;
        }

    private:
        const rlbwt_index& idx_;
        size_t row_;
        size_t remaining_;
    };

    forward_extractor extract_forward() const { return forward_extractor(*this); }

    const run_length_string& stored() const { return bwt_; }

    // maps a row of L to a position in the stored string (row must not
    // be the terminator row)
    size_t row_to_stored(size_t row) const {
        assert(row != term_row_);
        return row - (row > term_row_ ? 1 : 0);
    }

    size_t stored_to_row(size_t pos) const {
        return pos + (pos >= term_row_ ? 1 : 0);
    }

private:
    run_length_string bwt_; // L without '#'
    size_t term_row_ = 0;
};

} // namespace rlz

#endif // RLZ_RLBWT_INDEX_HPP_

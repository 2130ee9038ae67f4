/*
 * gap_bitvector.hpp
 *
 * Dynamic bitvector taking space proportional to the number of 1-bits.
 * Backed by the run-length string over the alphabet {0,1}: a bitvector
 * with b ones has at most 2b+1 runs, so the reduction keeps the O(b)
 * space bound while inheriting logarithmic rank/select/insert.
 */

#ifndef RLZ_GAP_BITVECTOR_HPP_
#define RLZ_GAP_BITVECTOR_HPP_

#include "rlz/run_length_string.hpp"

namespace rlz {

class gap_bitvector {
public:
    size_t size() const { return bits_.size(); }
    size_t ones() const { return bits_.count(1); }

    void insert(size_t pos, bool bit) { bits_.insert(pos, bit ? 1 : 0); }

    bool access(size_t pos) const { return bits_.access(pos) != 0; }

    // 1-bits strictly before pos
    size_t rank1(size_t pos) const { return bits_.rank(1, pos); }

    // position of the (k+1)-th 1-bit
    size_t select1(size_t k) const { return bits_.select(1, k); }

    size_t node_count() const { return bits_.node_count(); }

private:
    run_length_string bits_;
};

} // namespace rlz

#endif // RLZ_GAP_BITVECTOR_HPP_

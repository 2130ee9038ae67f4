/*
 * run_samples.hpp
 *
 * Per-run suffix-array samples for a growing run-length string. Each
 * run keeps at most two samples, the ones at its extremal offsets; a
 * sample pairs an offset inside the run with the text position of the
 * character stored there. Slots are kept in an order-statistic tree
 * parallel to the runs and are updated by replaying the insert events
 * the run-length string reports, so the structure never stores more
 * than two samples per run.
 */

#ifndef RLZ_RUN_SAMPLES_HPP_
#define RLZ_RUN_SAMPLES_HPP_

#include <cstdint>
#include <optional>

#include "rlz/ost_tree.hpp"
#include "rlz/run_length_string.hpp"

namespace rlz {

class run_samples {
public:
    size_t slots() const { return tree_.size(); }
    size_t sample_count() const { return samples_; }

    // mirror one insert into the underlying run-length string;
    // text_pos is the text position of the inserted character
    void apply(const run_length_string::insert_event& ev, uint64_t text_pos) {
        switch (ev.kind) {
        case run_length_string::insert_event::extended: {
            slot& s = tree_.at_rank(ev.run).n->val;
            for (unsigned i = 0; i < s.count; ++i)
                if (s.off[i] >= ev.offset) ++s.off[i];
            add_sample(s, ev.offset, text_pos);
            break;
        }
        case run_length_string::insert_event::new_run: {
            slot s;
            s.count = 1;
            s.off[0] = 0;
            s.pos[0] = text_pos;
            tree_.insert_at_rank(ev.run, 1, s);
            ++samples_;
            break;
        }
        case run_length_string::insert_event::split: {
            slot& left = tree_.at_rank(ev.run).n->val;
            slot right;
            unsigned keep = 0;
            for (unsigned i = 0; i < left.count; ++i) {
                if (left.off[i] < ev.offset) {
                    left.off[keep] = left.off[i];
                    left.pos[keep] = left.pos[i];
                    ++keep;
                } else {
                    right.off[right.count] = left.off[i] - ev.offset;
                    right.pos[right.count] = left.pos[i];
                    ++right.count;
                }
            }
            left.count = keep;
            slot mid;
            mid.count = 1;
            mid.off[0] = 0;
            mid.pos[0] = text_pos;
            tree_.insert_at_rank(ev.run + 1, 1, mid);
            tree_.insert_at_rank(ev.run + 2, 1, right);
            ++samples_;
            break;
        }
        }
    }

    // a sampled text position whose character sits in [lo, hi) of the
    // run-length string, if any run intersecting the range holds one
    std::optional<uint64_t> find_in(const run_length_string& rls, size_t lo,
                                    size_t hi) const {
        if (lo >= hi) return std::nullopt;
        size_t r0 = rls.run_containing(lo).index;
        size_t r1 = rls.run_containing(hi - 1).index;
        for (size_t r = r0; r <= r1; ++r) {
            auto rv = rls.run_at(r);
            const slot& s = tree_.at_rank(r).n->val;
            for (unsigned i = 0; i < s.count; ++i) {
                size_t p = rv.start + static_cast<size_t>(s.off[i]);
                if (p >= lo && p < hi) return s.pos[i];
            }
        }
        return std::nullopt;
    }

private:
    struct slot {
        unsigned count = 0;
        uint64_t off[2] = {0, 0}; // offsets inside the run, off[0] < off[1]
        uint64_t pos[2] = {0, 0}; // text positions of the sampled characters
    };

    ost_tree<slot> tree_;
    size_t samples_ = 0;

    // keep only the extremal-offset samples; an interior sample is
    // dropped, a new extreme evicts the old one on that side
    void add_sample(slot& s, uint64_t off, uint64_t pos) {
        if (s.count == 0) {
            s.off[0] = off;
            s.pos[0] = pos;
            s.count = 1;
            ++samples_;
        } else if (s.count == 1) {
            unsigned lo = off < s.off[0] ? 0 : 1;
            s.off[1 - lo] = s.off[0];
            s.pos[1 - lo] = s.pos[0];
            s.off[lo] = off;
            s.pos[lo] = pos;
            s.count = 2;
            ++samples_;
        } else if (off < s.off[0]) {
            s.off[0] = off;
            s.pos[0] = pos;
        } else if (off > s.off[1]) {
            s.off[1] = off;
            s.pos[1] = pos;
        }
        // interior offsets are not retained
    }
};

} // namespace rlz

#endif // RLZ_RUN_SAMPLES_HPP_

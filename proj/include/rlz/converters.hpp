/*
 * converters.hpp
 *
 * The two conversion pipelines between the run-length encoded BWT and
 * the LZ77 parse of a text, plus the shared RLBWT-reversal step. Both
 * directions work in space proportional to the number of BWT runs plus
 * LZ77 phrases: no plaintext buffer is ever materialized.
 */

#ifndef RLZ_CONVERTERS_HPP_
#define RLZ_CONVERTERS_HPP_

#include <functional>

#include "rlz/dyn_function.hpp"
#include "rlz/rlbwt_index.hpp"
#include "rlz/types.hpp"

namespace rlz {

// working-space and sampling instrumentation for the scaling tests
struct conversion_stats {
    size_t peak_runs = 0;     // max runs held by the growing index
    size_t peak_nodes = 0;    // max tree nodes across all live structures
    size_t peak_samples = 0;  // max live suffix-array samples
    size_t sample_fallbacks = 0; // source lookups that needed an LF walk
    bool sample_bound_ok = true; // samples never exceeded 2 * runs
};

// index of BWT(T) -> index of BWT(reverse T), by streaming the text out
// of one index and into a fresh one; works in either direction
rlbwt_index reverse_rlbwt(const rlbwt_index& idx);

// greedy LZ77 parse of T from the index of BWT(reverse T)
lz77_parse lz_factorize(const rlbwt_index& index_rev, conversion_stats* stats = nullptr);

// RLBWT(T) -> LZ77(T)
lz77_parse rlbwt_to_lz77(const rlbwt_runs& runs, conversion_stats* stats = nullptr);

// called once per text position with the row the growing index
// assigned to it; exposes the source-position map for verification
using step_observer =
    std::function<void(uint64_t pos, size_t row, const dyn_function& sources)>;

// LZ77(T) -> RLBWT(T)
rlbwt_runs lz77_to_rlbwt(const lz77_parse& parse, conversion_stats* stats = nullptr,
                         const step_observer& observe = {});

} // namespace rlz

#endif // RLZ_CONVERTERS_HPP_

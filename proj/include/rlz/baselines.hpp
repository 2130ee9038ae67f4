/*
 * baselines.hpp
 *
 * Brute-force oracles and codecs used as ground truth by the test
 * suite: rotation-sort BWT, definitional greedy LZ77, both decoders,
 * terminator wrapping, and deterministic corpus generation. The
 * suffix-array variants exist only to keep large corpus texts fast;
 * they are cross-checked against the definitional versions.
 */

#ifndef RLZ_BASELINES_HPP_
#define RLZ_BASELINES_HPP_

#include <string>
#include <vector>

#include "rlz/common.hpp"
#include "rlz/types.hpp"

namespace rlz {

// #·raw·$; throws alphabet_error if raw contains a terminator byte
byte_string wrap_text(const byte_string& raw);

// last column of the sorted rotation matrix; dispatches to the
// suffix-array variant above a size threshold
byte_string naive_bwt(const byte_string& t);
byte_string bwt_by_rotation_sort(const byte_string& t);
byte_string bwt_by_suffix_array(const byte_string& t);

rlbwt_runs naive_rlbwt(const byte_string& t);

// greedy parse: longest factor with an earlier (possibly overlapping)
// occurrence, then the next character; dispatches like naive_bwt
lz77_parse naive_lz77(const byte_string& t);
lz77_parse lz77_quadratic(const byte_string& t); // leftmost source
lz77_parse lz77_by_lpf(const byte_string& t);    // some valid source

byte_string lz77_decode(const lz77_parse& parse);
byte_string rlbwt_decode(const rlbwt_runs& runs);

// valid whenever the last character is unique (rotation order then
// coincides with suffix order)
std::vector<size_t> suffix_array(const byte_string& s);

enum class corpus_kind { random_bytes, periodic, fibonacci, mutated_repeats };

corpus_kind parse_corpus_kind(const std::string& name); // throws std::invalid_argument
std::string corpus_kind_name(corpus_kind kind);

byte_string gen_corpus(corpus_kind kind, size_t size, uint64_t seed);

} // namespace rlz

#endif // RLZ_BASELINES_HPP_

/*
 * common.hpp
 *
 * Shared definitions: byte alphabet with the two terminator symbols,
 * error types, and global operation counters used by the scaling tests.
 */

#ifndef RLZ_COMMON_HPP_
#define RLZ_COMMON_HPP_

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rlz {

using symbol = uint8_t;

// '#' sorts before everything, '$' before all ordinary text bytes.
// Ordinary text bytes are restricted to 0x02..0xFF.
constexpr symbol BWT_TERM = 0x00; // '#'
constexpr symbol LZ_TERM = 0x01;  // '$'

using byte_string = std::vector<symbol>;

// raw input contains a terminator byte; offset points at it
class alphabet_error : public std::runtime_error {
public:
    alphabet_error(size_t offset, symbol b)
        : std::runtime_error("forbidden byte 0x" + to_hex(b) +
                             " at offset " + std::to_string(offset)),
          offset_(offset) {}

    size_t offset() const { return offset_; }

private:
    static std::string to_hex(symbol b) {
        static const char* digits = "0123456789abcdef";
        return {digits[b >> 4], digits[b & 0xf]};
    }
    size_t offset_;
};

// malformed serialized file (bad magic, bad version, truncation)
class format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// structurally invalid RLBWT runs or LZ77 parse
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace opstats {

// counts of rank/select/access/insert calls on the dynamic compressed
// strings; used by the time-scaling sanity checks
inline uint64_t rank_calls = 0;
inline uint64_t select_calls = 0;
inline uint64_t access_calls = 0;
inline uint64_t insert_calls = 0;

inline void reset() { rank_calls = select_calls = access_calls = insert_calls = 0; }

inline uint64_t total() {
    return rank_calls + select_calls + access_calls + insert_calls;
}

} // namespace opstats

} // namespace rlz

#endif // RLZ_COMMON_HPP_

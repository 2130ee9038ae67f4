/*
 * serial.hpp
 *
 * Bit-exact file formats for the two compressed representations.
 *
 *   RLBW file: "RLBW", version 0x01, r as 8-byte little-endian, then r
 *   records of (8-byte LE run length, 1-byte symbol code).
 *
 *   LZ77 file: "LZ77", version 0x01, z as 8-byte little-endian, then z
 *   records of (8-byte LE source with all-ones = null, 8-byte LE
 *   length, 1-byte symbol code).
 *
 * Symbol codes are the in-memory bytes: 0x00 = '#', 0x01 = '$',
 * anything else a literal.
 */

#ifndef RLZ_SERIAL_HPP_
#define RLZ_SERIAL_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rlz/types.hpp"

namespace rlz {

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class file_kind { rlbwt, lz77 };

// throws format_error if the buffer starts with neither magic
file_kind detect_kind(const std::vector<uint8_t>& buf);

std::vector<uint8_t> serialize_rlbwt(const rlbwt_runs& runs);
rlbwt_runs deserialize_rlbwt(const std::vector<uint8_t>& buf);

std::vector<uint8_t> serialize_lz77(const lz77_parse& parse);
lz77_parse deserialize_lz77(const std::vector<uint8_t>& buf);

// whole-file helpers; throw io_error
std::vector<uint8_t> read_file(const std::string& path);
void write_file(const std::string& path, const std::vector<uint8_t>& data);

} // namespace rlz

#endif // RLZ_SERIAL_HPP_

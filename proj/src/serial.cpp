#include "rlz/serial.hpp"

#include <cstring>
#include <fstream>

namespace rlz {

namespace {

constexpr char RLBWT_MAGIC[4] = {'R', 'L', 'B', 'W'};
constexpr char LZ77_MAGIC[4] = {'L', 'Z', '7', '7'};
constexpr uint8_t VERSION = 0x01;
constexpr size_t HEADER_SIZE = 4 + 1 + 8;

void put_u64(std::vector<uint8_t>& buf, uint64_t v) {
    for (int i = 0; i < 8; ++i) buf.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint64_t get_u64(const std::vector<uint8_t>& buf, size_t at) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(buf[at + i]) << (8 * i);
    return v;
}

// validates magic, version, and that the payload holds exactly `count`
// records of `record_size` bytes; returns the record count
uint64_t check_header(const std::vector<uint8_t>& buf, const char* magic,
                      size_t record_size) {
    if (buf.size() < HEADER_SIZE) throw format_error("truncated header");
    if (std::memcmp(buf.data(), magic, 4) != 0) throw format_error("bad magic");
    if (buf[4] != VERSION) throw format_error("unsupported version");
    uint64_t count = get_u64(buf, 5);
    if (count > (buf.size() - HEADER_SIZE) / record_size)
        throw format_error("truncated payload");
    if (buf.size() != HEADER_SIZE + count * record_size)
        throw format_error("payload size mismatch");
    return count;
}

} // namespace

file_kind detect_kind(const std::vector<uint8_t>& buf) {
    if (buf.size() >= 4 && std::memcmp(buf.data(), RLBWT_MAGIC, 4) == 0)
        return file_kind::rlbwt;
    if (buf.size() >= 4 && std::memcmp(buf.data(), LZ77_MAGIC, 4) == 0)
        return file_kind::lz77;
    throw format_error("unrecognized file magic");
}

std::vector<uint8_t> serialize_rlbwt(const rlbwt_runs& runs) {
    std::vector<uint8_t> buf;
    buf.reserve(HEADER_SIZE + runs.runs.size() * 9);
    buf.insert(buf.end(), RLBWT_MAGIC, RLBWT_MAGIC + 4);
    buf.push_back(VERSION);
    put_u64(buf, runs.runs.size());
    for (auto [len, c] : runs.runs) {
        put_u64(buf, len);
        buf.push_back(c);
    }
    return buf;
}

rlbwt_runs deserialize_rlbwt(const std::vector<uint8_t>& buf) {
    uint64_t r = check_header(buf, RLBWT_MAGIC, 9);
    rlbwt_runs out;
    out.runs.reserve(static_cast<size_t>(r));
    size_t at = HEADER_SIZE;
    for (uint64_t k = 0; k < r; ++k, at += 9)
        out.runs.emplace_back(get_u64(buf, at), buf[at + 8]);
    out.validate();
    return out;
}

std::vector<uint8_t> serialize_lz77(const lz77_parse& parse) {
    std::vector<uint8_t> buf;
    buf.reserve(HEADER_SIZE + parse.phrases.size() * 17);
    buf.insert(buf.end(), LZ77_MAGIC, LZ77_MAGIC + 4);
    buf.push_back(VERSION);
    put_u64(buf, parse.phrases.size());
    for (auto& p : parse.phrases) {
        put_u64(buf, p.src);
        put_u64(buf, p.len);
        buf.push_back(p.trail);
    }
    return buf;
}

lz77_parse deserialize_lz77(const std::vector<uint8_t>& buf) {
    uint64_t z = check_header(buf, LZ77_MAGIC, 17);
    lz77_parse out;
    out.phrases.reserve(static_cast<size_t>(z));
    size_t at = HEADER_SIZE;
    for (uint64_t k = 0; k < z; ++k, at += 17)
        out.phrases.push_back({get_u64(buf, at), get_u64(buf, at + 8), buf[at + 16]});
    out.validate();
    return out;
}

std::vector<uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path + " for reading");
    std::vector<uint8_t> data((std::istreambuf_iterator<char>(in)),
                              std::istreambuf_iterator<char>());
    if (in.bad()) throw io_error("read failure on " + path);
    return data;
}

void write_file(const std::string& path, const std::vector<uint8_t>& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    if (!out) throw io_error("write failure on " + path);
}

} // namespace rlz

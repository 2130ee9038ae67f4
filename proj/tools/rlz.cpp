/*
 * rlz: compress text to RLBWT or LZ77 files, convert between the two
 * compressed formats without decompressing, decompress, and report
 * statistics. Exit codes: 0 success, 1 I/O, 2 alphabet/validation,
 * 3 malformed file.
 */

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rlz/baselines.hpp"
#include "rlz/converters.hpp"
#include "rlz/serial.hpp"

namespace {

rlz::byte_string load_raw(const std::string& path) {
    auto data = rlz::read_file(path);
    return rlz::byte_string(data.begin(), data.end());
}

// strips the wrapping terminators from a decoded text
rlz::byte_string unwrap(const rlz::byte_string& t) {
    if (t.size() < 2 || t.front() != rlz::BWT_TERM || t.back() != rlz::LZ_TERM)
        throw rlz::validation_error("decoded text is not terminator-wrapped");
    return rlz::byte_string(t.begin() + 1, t.end() - 1);
}

int run_compress(const std::string& in, const std::string& format,
                 const std::string& out) {
    rlz::byte_string t = rlz::wrap_text(load_raw(in));
    std::cerr << "n=" << t.size() << "\n";
    if (format == "rlbwt") {
        rlz::rlbwt_runs runs = rlz::naive_rlbwt(t);
        std::cerr << "r=" << runs.runs.size() << "\n";
        rlz::write_file(out, rlz::serialize_rlbwt(runs));
    } else {
        rlz::lz77_parse parse = rlz::naive_lz77(t);
        std::cerr << "z=" << parse.phrases.size() << "\n";
        rlz::write_file(out, rlz::serialize_lz77(parse));
    }
    return 0;
}

int run_convert(const std::string& in, const std::string& out) {
    auto data = rlz::read_file(in);
    if (rlz::detect_kind(data) == rlz::file_kind::rlbwt) {
        rlz::lz77_parse parse = rlz::rlbwt_to_lz77(rlz::deserialize_rlbwt(data));
        std::cerr << "z=" << parse.phrases.size() << "\n";
        rlz::write_file(out, rlz::serialize_lz77(parse));
    } else {
        rlz::rlbwt_runs runs = rlz::lz77_to_rlbwt(rlz::deserialize_lz77(data));
        std::cerr << "r=" << runs.runs.size() << "\n";
        rlz::write_file(out, rlz::serialize_rlbwt(runs));
    }
    return 0;
}

int run_decompress(const std::string& in, const std::string& out) {
    auto data = rlz::read_file(in);
    rlz::byte_string t;
    if (rlz::detect_kind(data) == rlz::file_kind::rlbwt)
        t = rlz::rlbwt_decode(rlz::deserialize_rlbwt(data));
    else
        t = rlz::lz77_decode(rlz::deserialize_lz77(data));
    rlz::byte_string raw = unwrap(t);
    rlz::write_file(out, std::vector<uint8_t>(raw.begin(), raw.end()));
    return 0;
}

int run_stats(const std::string& in) {
    auto data = rlz::read_file(in);

    size_t n = 0, r = 0, z = 0;
    bool compressed = true;
    try {
        rlz::detect_kind(data);
    } catch (const rlz::format_error&) {
        compressed = false;
    }

    if (!compressed) {
        // plaintext: build both representations directly
        rlz::byte_string t = rlz::wrap_text(rlz::byte_string(data.begin(), data.end()));
        n = t.size();
        r = rlz::naive_rlbwt(t).runs.size();
        z = rlz::naive_lz77(t).phrases.size();
    } else if (rlz::detect_kind(data) == rlz::file_kind::rlbwt) {
        rlz::rlbwt_runs runs = rlz::deserialize_rlbwt(data);
        n = runs.text_length();
        r = runs.runs.size();
        z = rlz::rlbwt_to_lz77(runs).phrases.size();
    } else {
        rlz::lz77_parse parse = rlz::deserialize_lz77(data);
        n = parse.text_length();
        z = parse.phrases.size();
        r = rlz::lz77_to_rlbwt(parse).runs.size();
    }

    size_t rlbwt_bytes = 13 + 9 * r;
    size_t lz77_bytes = 13 + 17 * z;
    std::cout << "n=" << n << "\n"
              << "r=" << r << "\n"
              << "z=" << z << "\n"
              << "rlbwt_file_bytes=" << rlbwt_bytes << "\n"
              << "lz77_file_bytes=" << lz77_bytes << "\n"
              << "rlbwt_ratio=" << static_cast<double>(n) / static_cast<double>(rlbwt_bytes)
              << "\n"
              << "lz77_ratio=" << static_cast<double>(n) / static_cast<double>(lz77_bytes)
              << "\n";
    return 0;
}

int run_gen(const std::string& kind, size_t size, uint64_t seed,
            const std::string& out) {
    rlz::byte_string raw = rlz::gen_corpus(rlz::parse_corpus_kind(kind), size, seed);
    rlz::write_file(out, std::vector<uint8_t>(raw.begin(), raw.end()));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"RLBWT <-> LZ77 compression tool"};
    app.require_subcommand(1);

    std::string in, out, format = "rlbwt", kind = "random";
    size_t size = 0;
    uint64_t seed = 0;
    if (const char* env = std::getenv("TOOL_SEED")) seed = std::strtoull(env, nullptr, 10);

    auto* compress = app.add_subcommand("compress", "compress plaintext");
    compress->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"rlbwt", "lz77"}));
    compress->add_option("input", in)->required();
    compress->add_option("output", out)->required();

    auto* convert = app.add_subcommand(
        "convert", "convert between compressed formats (direction from magic)");
    convert->add_option("input", in)->required();
    convert->add_option("output", out)->required();

    auto* decompress = app.add_subcommand("decompress", "decompress to plaintext");
    decompress->add_option("input", in)->required();
    decompress->add_option("output", out)->required();

    auto* stats = app.add_subcommand("stats", "report n, r, z and ratios");
    stats->add_option("input", in)->required();

    auto* gen = app.add_subcommand("gen", "generate a test text");
    gen->add_option("--kind", kind, "random|periodic|fibonacci|mutated-repeats");
    gen->add_option("--size", size)->required();
    gen->add_option("--seed", seed, "defaults to $TOOL_SEED");
    gen->add_option("output", out)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compress->parsed()) return run_compress(in, format, out);
        if (convert->parsed()) return run_convert(in, out);
        if (decompress->parsed()) return run_decompress(in, out);
        if (stats->parsed()) return run_stats(in);
        if (gen->parsed()) return run_gen(kind, size, seed, out);
    } catch (const rlz::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const rlz::alphabet_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rlz::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const rlz::format_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

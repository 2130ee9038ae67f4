#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "corpus.hpp"
#include "rlz/baselines.hpp"

using rlz::byte_string;
using rlz::symbol;

namespace {

byte_string bs(const std::string& s) {
    byte_string out;
    for (char c : s) out.push_back(c == '#' ? rlz::BWT_TERM
                                            : c == '$' ? rlz::LZ_TERM
                                                       : static_cast<symbol>(c));
    return out;
}

} // namespace

TEST_CASE("wrap_text adds terminators and rejects terminator bytes") {
    CHECK(rlz::wrap_text({}) == bs("#$"));
    CHECK(rlz::wrap_text(bs("ab")) == bs("#ab$"));

    byte_string bad = bs("ab");
    bad.push_back(0x00);
    try {
        rlz::wrap_text(bad);
        FAIL("expected alphabet_error");
    } catch (const rlz::alphabet_error& e) {
        CHECK(e.offset() == 2);
    }
    bad[2] = 0x01;
    CHECK_THROWS_AS(rlz::wrap_text(bad), rlz::alphabet_error);
}

TEST_CASE("hand-checked BWTs") {
    CHECK(rlz::naive_bwt(bs("#$")) == bs("$#"));
    CHECK(rlz::naive_bwt(bs("#aaaa$")) == bs("$aaaa#"));
    CHECK(rlz::naive_bwt(bs("#banana$")) == bs("$annb#aa"));

    auto runs = rlz::naive_rlbwt(bs("#banana$"));
    REQUIRE(runs.runs.size() == 6);
    CHECK(runs.runs[0] == std::pair<uint64_t, symbol>{1, rlz::LZ_TERM});
    CHECK(runs.runs[2] == std::pair<uint64_t, symbol>{2, 'n'});
    CHECK(runs.runs[4] == std::pair<uint64_t, symbol>{1, rlz::BWT_TERM});
    runs.validate();
}

TEST_CASE("hand-checked LZ77 parses") {
    auto p1 = rlz::naive_lz77(bs("#$"));
    REQUIRE(p1.phrases.size() == 2);
    for (auto& ph : p1.phrases) CHECK(ph.len == 0);

    auto p2 = rlz::naive_lz77(bs("#aaaa$"));
    REQUIRE(p2.phrases.size() == 3);
    CHECK(p2.phrases[0] == rlz::lz77_phrase{rlz::lz77_phrase::null_src, 0, rlz::BWT_TERM});
    CHECK(p2.phrases[1] == rlz::lz77_phrase{rlz::lz77_phrase::null_src, 0, 'a'});
    CHECK(p2.phrases[2] == rlz::lz77_phrase{1, 3, rlz::LZ_TERM});

    auto p3 = rlz::naive_lz77(bs("#banana$"));
    REQUIRE(p3.phrases.size() == 5);
    CHECK(p3.phrases[4] == rlz::lz77_phrase{2, 3, rlz::LZ_TERM});
    p3.validate();
}

TEST_CASE("greedy maximality of the definitional parser") {
    byte_string t = rlz::wrap_text(rlz::gen_corpus(rlz::corpus_kind::mutated_repeats, 400, 3));
    auto parse = rlz::lz77_quadratic(t);
    size_t pos = 0;
    for (auto& ph : parse.phrases) {
        // the phrase body plus its trailing character must have no
        // occurrence starting earlier
        size_t len = static_cast<size_t>(ph.len) + 1;
        for (size_t p = 0; p < pos; ++p) {
            bool match = p + len <= t.size();
            for (size_t k = 0; k < len && match; ++k) match = t[p + k] == t[pos + k];
            CHECK(!match);
        }
        pos += len;
    }
}

TEST_CASE("decoders invert the encoders") {
    for (const auto& e : rlz_test::corpus_entries(false)) {
        if (e.size > 1024) continue;
        byte_string t = rlz_test::corpus_text(e);
        CHECK(rlz::lz77_decode(rlz::naive_lz77(t)) == t);
        CHECK(rlz::rlbwt_decode(rlz::naive_rlbwt(t)) == t);
    }
}

TEST_CASE("decoder errors") {
    rlz::lz77_parse bad;
    bad.phrases.push_back({0, 1, 'a'}); // source references unwritten text
    CHECK_THROWS_AS(rlz::lz77_decode(bad), rlz::validation_error);

    rlz::rlbwt_runs no_term;
    no_term.runs.emplace_back(2, 'a');
    CHECK_THROWS_AS(rlz::rlbwt_decode(no_term), rlz::format_error);
}

TEST_CASE("suffix-array variants agree with the definitional ones") {
    for (const auto& e : rlz_test::corpus_entries(false)) {
        if (e.size > 2000) continue;
        byte_string t = rlz_test::corpus_text(e);

        CHECK(rlz::bwt_by_suffix_array(t) == rlz::bwt_by_rotation_sort(t));

        auto slow = rlz::lz77_quadratic(t);
        auto fast = rlz::lz77_by_lpf(t);
        REQUIRE(fast.phrases.size() == slow.phrases.size());
        size_t pos = 0;
        for (size_t i = 0; i < slow.phrases.size(); ++i) {
            CHECK(fast.phrases[i].len == slow.phrases[i].len);
            CHECK(fast.phrases[i].trail == slow.phrases[i].trail);
            // the fast parser's source need not be leftmost, only valid
            if (fast.phrases[i].len > 0) {
                size_t src = static_cast<size_t>(fast.phrases[i].src);
                REQUIRE(src < pos);
                for (uint64_t k = 0; k < fast.phrases[i].len; ++k)
                    CHECK(t[src + k] == t[pos + k]);
            }
            pos += static_cast<size_t>(slow.phrases[i].len) + 1;
        }
        fast.validate();
    }
}

TEST_CASE("corpus generation is deterministic and matches the fixed words") {
    CHECK(rlz::gen_corpus(rlz::corpus_kind::periodic, 6, 99) == bs("ababab"));
    CHECK(rlz::gen_corpus(rlz::corpus_kind::fibonacci, 5, 0) == bs("abaab"));
    CHECK(rlz::gen_corpus(rlz::corpus_kind::fibonacci, 8, 0) == bs("abaababa"));
    for (auto kind : {rlz::corpus_kind::random_bytes, rlz::corpus_kind::mutated_repeats}) {
        auto a = rlz::gen_corpus(kind, 500, 42);
        auto b = rlz::gen_corpus(kind, 500, 42);
        auto c = rlz::gen_corpus(kind, 500, 43);
        CHECK(a == b);
        CHECK(a != c);
        for (symbol s : a) CHECK(s >= 0x02);
    }
    CHECK(rlz::parse_corpus_kind("mutated-repeats") == rlz::corpus_kind::mutated_repeats);
    CHECK_THROWS_AS(rlz::parse_corpus_kind("bogus"), std::invalid_argument);
}

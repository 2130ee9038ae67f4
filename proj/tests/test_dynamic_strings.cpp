#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "rlz/gap_bitvector.hpp"
#include "rlz/run_length_string.hpp"

using rlz::run_length_string;
using rlz::symbol;

namespace {

size_t naive_rank(const std::vector<symbol>& s, symbol c, size_t pos) {
    size_t k = 0;
    for (size_t i = 0; i < pos; ++i) k += s[i] == c;
    return k;
}

size_t naive_runs(const std::vector<symbol>& s) {
    size_t r = 0;
    for (size_t i = 0; i < s.size(); ++i) r += i == 0 || s[i] != s[i - 1];
    return r;
}

} // namespace

TEST_CASE("run structure and insert events") {
    run_length_string s;

    auto e = s.insert(0, 'b'); // "b"
    CHECK(e.kind == run_length_string::insert_event::new_run);
    e = s.insert(1, 'b'); // "bb"
    CHECK(e.kind == run_length_string::insert_event::extended);
    CHECK(e.offset == 1);
    e = s.insert(2, 'b'); // "bbb"
    CHECK(e.kind == run_length_string::insert_event::extended);
    CHECK(s.runs() == 1);

    e = s.insert(1, 'c'); // "bcbb": split b^3 -> b^1 c b^2
    CHECK(e.kind == run_length_string::insert_event::split);
    CHECK(e.run == 0);
    CHECK(e.offset == 1);
    CHECK(s.runs() == 3);
    CHECK(s.access(0) == 'b');
    CHECK(s.access(1) == 'c');
    CHECK(s.access(2) == 'b');
    CHECK(s.access(3) == 'b');

    e = s.insert(1, 'b'); // boundary, absorbed by the left b-run
    CHECK(e.kind == run_length_string::insert_event::extended);
    CHECK(s.runs() == 3);
    CHECK(s.size() == 5);
    CHECK(s.node_count() == 6);

    CHECK(s.rank('b', 5) == 4);
    CHECK(s.select('b', 2) == 3);
    CHECK(s.select('c', 0) == 2);
    CHECK(s.run_containing(3).sym == 'b');
    CHECK(s.run_containing(3).start == 3);
    CHECK(s.run_at(1).sym == 'c');
}

TEST_CASE("randomized replay against a plain byte vector") {
    std::mt19937_64 rng(987);
    run_length_string s;
    std::vector<symbol> ref;
    const symbol alpha[] = {'a', 'b', 'c'}; // small alphabet -> long runs and splits

    for (int step = 0; step < 30000; ++step) {
        size_t op = rng() % 4;
        if (ref.empty() || op == 0) {
            size_t pos = rng() % (ref.size() + 1);
            symbol c = alpha[rng() % 3];
            s.insert(pos, c);
            ref.insert(ref.begin() + static_cast<long>(pos), c);
        } else if (op == 1) {
            size_t pos = rng() % ref.size();
            CHECK(s.access(pos) == ref[pos]);
        } else if (op == 2) {
            symbol c = alpha[rng() % 3];
            size_t pos = rng() % (ref.size() + 1);
            CHECK(s.rank(c, pos) == naive_rank(ref, c, pos));
        } else {
            symbol c = alpha[rng() % 3];
            size_t cnt = naive_rank(ref, c, ref.size());
            CHECK(s.count(c) == cnt);
            if (cnt > 0) {
                size_t k = rng() % cnt;
                size_t pos = s.select(c, k);
                CHECK(ref[pos] == c);
                CHECK(naive_rank(ref, c, pos) == k);
            }
        }
        if (step % 1000 == 0) CHECK(s.runs() == naive_runs(ref));
    }
    CHECK(s.size() == ref.size());
    CHECK(s.runs() == naive_runs(ref));
    CHECK(s.node_count() == 2 * s.runs());
}

TEST_CASE("gap bitvector replay against std::vector<bool>") {
    std::mt19937_64 rng(555);
    rlz::gap_bitvector bv;
    std::vector<bool> ref;

    for (int step = 0; step < 30000; ++step) {
        size_t op = rng() % 3;
        if (ref.empty() || op == 0) {
            size_t pos = rng() % (ref.size() + 1);
            bool bit = rng() % 4 == 0; // sparse ones
            bv.insert(pos, bit);
            ref.insert(ref.begin() + static_cast<long>(pos), bit);
        } else if (op == 1) {
            size_t pos = rng() % (ref.size() + 1);
            size_t k = 0;
            for (size_t i = 0; i < pos; ++i) k += ref[i];
            CHECK(bv.rank1(pos) == k);
        } else {
            size_t ones = bv.ones();
            if (ones == 0) continue;
            size_t k = rng() % ones;
            size_t pos = bv.select1(k);
            CHECK(ref[pos]);
            size_t cnt = 0;
            for (size_t i = 0; i < pos; ++i) cnt += ref[i];
            CHECK(cnt == k);
        }
    }
    CHECK(bv.size() == ref.size());
}

TEST_CASE("errors on out-of-range queries") {
    run_length_string s;
    s.insert(0, 'a');
    CHECK_THROWS_AS(s.access(1), std::out_of_range);
    CHECK_THROWS_AS(s.rank('a', 2), std::out_of_range);
    CHECK_THROWS_AS(s.select('a', 1), std::out_of_range);
    CHECK_THROWS_AS(s.select('b', 0), std::out_of_range);
    CHECK_THROWS_AS(s.insert(2, 'a'), std::out_of_range);
}

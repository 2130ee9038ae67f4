#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "rlz/ost_tree.hpp"

using rlz::ost_tree;

TEST_CASE("insert at rank and in-order positions") {
    ost_tree<int> t;
    // build 0 1 2 3 4 by inserting out of order
    auto* h2 = t.insert_at_rank(0, 1, 2);
    t.insert_at_rank(0, 1, 0);
    t.insert_at_rank(1, 1, 1);
    t.insert_at_rank(3, 1, 3);
    auto* h4 = t.insert_at_rank(4, 1, 4);

    REQUIRE(t.size() == 5);
    for (size_t k = 0; k < 5; ++k) CHECK(t.at_rank(k).n->val == static_cast<int>(k));
    CHECK(t.rank_of(h2) == 2);
    CHECK(t.rank_of(h4) == 4);
}

TEST_CASE("weighted search skips zero-weight nodes") {
    ost_tree<char> t;
    t.insert_at_rank(0, 3, 'a');
    t.insert_at_rank(1, 0, 'x');
    t.insert_at_rank(2, 2, 'b');

    CHECK(t.total_weight() == 5);
    CHECK(t.find_by_weight(0).n->val == 'a');
    CHECK(t.find_by_weight(2).n->val == 'a');
    CHECK(t.find_by_weight(2).offset == 2);
    CHECK(t.find_by_weight(3).n->val == 'b');
    CHECK(t.find_by_weight(3).offset == 0);
    CHECK(t.prefix_weight(0) == 0);
    CHECK(t.prefix_weight(1) == 3);
    CHECK(t.prefix_weight(2) == 3);
    CHECK(t.prefix_weight(3) == 5);
}

TEST_CASE("randomized replay against a plain vector") {
    std::mt19937_64 rng(12345);
    ost_tree<uint64_t> t;
    std::vector<std::pair<uint64_t, ost_tree<uint64_t>::handle>> ref; // (weight, handle)

    for (int step = 0; step < 20000; ++step) {
        size_t op = rng() % 4;
        if (t.size() == 0 || op == 0) {
            size_t k = rng() % (t.size() + 1);
            uint64_t w = rng() % 5;
            auto* h = t.insert_at_rank(k, w, w);
            ref.insert(ref.begin() + static_cast<long>(k), {w, h});
        } else if (op == 1) {
            size_t k = rng() % t.size();
            auto loc = t.at_rank(k);
            CHECK(loc.n == ref[k].second);
            CHECK(loc.rank == k);
            uint64_t start = 0;
            for (size_t i = 0; i < k; ++i) start += ref[i].first;
            CHECK(loc.start == start);
            CHECK(t.rank_of(ref[k].second) == k);
        } else if (op == 2) {
            size_t k = rng() % t.size();
            int64_t delta = static_cast<int64_t>(rng() % 3);
            t.add_weight(ref[k].second, delta);
            ref[k].first += static_cast<uint64_t>(delta);
        } else {
            uint64_t total = t.total_weight();
            if (total == 0) continue;
            uint64_t q = rng() % total;
            auto loc = t.find_by_weight(q);
            size_t i = 0;
            uint64_t acc = 0;
            while (acc + ref[i].first <= q) acc += ref[i++].first;
            CHECK(loc.n == ref[i].second);
            CHECK(loc.offset == q - acc);
        }
    }

    // full scan via first/next matches the reference order
    size_t i = 0;
    for (auto* h = t.first(); h; h = t.next(h), ++i) CHECK(h == ref[i].second);
    CHECK(i == ref.size());

    // partition_count with a rank-threshold predicate
    for (size_t thr : {size_t{0}, ref.size() / 2, ref.size()}) {
        CHECK(t.partition_count([&](const ost_tree<uint64_t>::node* n) {
                  return t.rank_of(n) < thr;
              }) == thr);
    }
}

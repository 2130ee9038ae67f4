/*
 * run_length_string.hpp
 *
 * Dynamic run-length encoded string over byte symbols. Maximal
 * equal-letter runs are kept in an order-statistic tree weighted by run
 * length; for every symbol a secondary tree holds that symbol's runs in
 * text order, weighted by length and cross-linked with the main tree.
 * rank/select/access/insert all run in time polylogarithmic in the
 * number of runs, never in the string length.
 *
 * insert() reports how the run structure changed (run extended, new run
 * created, run split); callers that mirror per-run bookkeeping, such as
 * the suffix-array sampling used by the LZ factorization, replay these
 * events.
 */

#ifndef RLZ_RUN_LENGTH_STRING_HPP_
#define RLZ_RUN_LENGTH_STRING_HPP_

#include <array>
#include <cassert>
#include <cstdint>
#include <stdexcept>

#include "rlz/common.hpp"
#include "rlz/ost_tree.hpp"

namespace rlz {

class run_length_string {
public:
    struct insert_event {
        enum kind_t { extended, new_run, split };
        kind_t kind;
        // extended: run that grew; offset of the inserted symbol in it.
        // new_run:  index of the new unit run (offset 0).
        // split:    index of the left fragment; offset = its new length
        //           (the inserted symbol sits in run `run`+1).
        size_t run;
        uint64_t offset;
    };

    struct run_view {
        size_t index;
        size_t start;
        uint64_t length;
        symbol sym;
    };

    run_length_string() = default;

    size_t size() const { return static_cast<size_t>(main_.total_weight()); }
    size_t runs() const { return main_.size(); }
    size_t count(symbol c) const { return static_cast<size_t>(per_sym_[c].total_weight()); }

    // main-tree nodes plus per-symbol nodes; each run owns one of each
    size_t node_count() const { return 2 * main_.size(); }

    symbol access(size_t pos) const {
        ++opstats::access_calls;
        if (pos >= size()) throw std::out_of_range("run_length_string::access");
        return main_.find_by_weight(pos).n->val.sym;
    }

    // occurrences of c strictly before pos
    size_t rank(symbol c, size_t pos) const {
        ++opstats::rank_calls;
        if (pos > size()) throw std::out_of_range("run_length_string::rank");
        if (pos == size()) return count(c);
        auto loc = main_.find_by_weight(pos);
        size_t before_runs = sym_runs_before(c, loc.rank);
        size_t base = static_cast<size_t>(per_sym_[c].prefix_weight(before_runs));
        if (loc.n->val.sym == c) base += static_cast<size_t>(loc.offset);
        return base;
    }

    // position of the (k+1)-th occurrence of c
    size_t select(symbol c, size_t k) const {
        ++opstats::select_calls;
        if (k >= count(c)) throw std::out_of_range("run_length_string::select");
        auto loc = per_sym_[c].find_by_weight(k);
        auto* m = main_node(loc.n);
        return static_cast<size_t>(main_.weight_before(m) + loc.offset);
    }

    insert_event insert(size_t pos, symbol c) {
        ++opstats::insert_calls;
        if (pos > size()) throw std::out_of_range("run_length_string::insert");

        if (main_.empty()) {
            make_run(0, c, 1);
            return {insert_event::new_run, 0, 0};
        }

        if (pos == size()) {
            // append: extend the last run or open a new one
            auto last = main_.at_rank(main_.size() - 1);
            if (last.n->val.sym == c) {
                grow(last.n, 1);
                return {insert_event::extended, last.rank, last.n->w - 1};
            }
            make_run(main_.size(), c, 1);
            return {insert_event::new_run, main_.size() - 1, 0};
        }

        auto loc = main_.find_by_weight(pos);
        if (loc.n->val.sym == c) {
            grow(loc.n, 1);
            return {insert_event::extended, loc.rank, loc.offset};
        }

        if (loc.offset == 0) {
            // boundary: absorb into the preceding run if it matches
            if (loc.rank > 0) {
                auto prev = main_.at_rank(loc.rank - 1);
                if (prev.n->val.sym == c) {
                    grow(prev.n, 1);
                    return {insert_event::extended, prev.rank, prev.n->w - 1};
                }
            }
            make_run(loc.rank, c, 1);
            return {insert_event::new_run, loc.rank, 0};
        }

        // split: b^m -> b^offset c b^(m-offset)
        uint64_t left_len = loc.offset;
        uint64_t right_len = loc.n->w - loc.offset;
        symbol b = loc.n->val.sym;

        shrink_to(loc.n, left_len);
        make_run(loc.rank + 1, c, 1);
        make_run_after(loc.rank + 2, b, right_len, sym_node(loc.n));
        return {insert_event::split, loc.rank, left_len};
    }

    run_view run_containing(size_t pos) const {
        if (pos >= size()) throw std::out_of_range("run_length_string::run_containing");
        auto loc = main_.find_by_weight(pos);
        return {loc.rank, static_cast<size_t>(loc.start), loc.n->w, loc.n->val.sym};
    }

    run_view run_at(size_t k) const {
        if (k >= runs()) throw std::out_of_range("run_length_string::run_at");
        auto loc = main_.at_rank(k);
        return {loc.rank, static_cast<size_t>(loc.start), loc.n->w, loc.n->val.sym};
    }

private:
    struct main_val {
        symbol sym;
        void* sym_node; // ost_tree<sym_val>::node* of the same run
    };
    struct sym_val {
        void* main_node; // ost_tree<main_val>::node* of the same run
    };

    using main_tree = ost_tree<main_val>;
    using sym_tree = ost_tree<sym_val>;

    main_tree main_;
    std::array<sym_tree, 256> per_sym_;

    static main_tree::node* main_node(const sym_tree::node* s) {
        return static_cast<main_tree::node*>(s->val.main_node);
    }
    static sym_tree::node* sym_node(const main_tree::node* m) {
        return static_cast<sym_tree::node*>(m->val.sym_node);
    }

    // number of c-runs among the first k runs
    size_t sym_runs_before(symbol c, size_t k) const {
        return per_sym_[c].partition_count([&](const sym_tree::node* s) {
            return main_.rank_of(main_node(s)) < k;
        });
    }

    void grow(main_tree::node* m, uint64_t by) {
        main_.add_weight(m, static_cast<int64_t>(by));
        per_sym_[m->val.sym].add_weight(sym_node(m), static_cast<int64_t>(by));
    }

    void shrink_to(main_tree::node* m, uint64_t len) {
        int64_t delta = static_cast<int64_t>(len) - static_cast<int64_t>(m->w);
        main_.add_weight(m, delta);
        per_sym_[m->val.sym].add_weight(sym_node(m), delta);
    }

    // create a run at main rank k; its position in the symbol tree is
    // found by counting c-runs in front of it
    main_tree::node* make_run(size_t k, symbol c, uint64_t len) {
        auto* m = main_.insert_at_rank(k, len, {c, nullptr});
        size_t sk = sym_runs_before(c, k);
        auto* s = per_sym_[c].insert_at_rank(sk, len, {m});
        m->val.sym_node = s;
        return m;
    }

    // create a run at main rank k whose symbol-tree slot is known to be
    // right after `after` (used for the right fragment of a split)
    main_tree::node* make_run_after(size_t k, symbol c, uint64_t len,
                                    sym_tree::node* after) {
        auto* m = main_.insert_at_rank(k, len, {c, nullptr});
        size_t sk = per_sym_[c].rank_of(after) + 1;
        auto* s = per_sym_[c].insert_at_rank(sk, len, {m});
        m->val.sym_node = s;
        return m;
    }
};

} // namespace rlz

#endif // RLZ_RUN_LENGTH_STRING_HPP_

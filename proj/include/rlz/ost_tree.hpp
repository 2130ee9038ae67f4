/*
 * ost_tree.hpp
 *
 * Order-statistic AVL tree with parent pointers. Every node carries a
 * 64-bit weight; subtrees aggregate node count and weight sum, so the
 * tree supports insert-at-rank, search by rank or by weighted position,
 * prefix weight sums, and handle-to-rank climbing, all in O(log n).
 * Insert-only (the algorithms built on top never delete).
 */

#ifndef RLZ_OST_TREE_HPP_
#define RLZ_OST_TREE_HPP_

#include <cassert>
#include <cstdint>
#include <cstddef>
#include <utility>

namespace rlz {

template <typename V>
class ost_tree {
public:
    struct node {
        node* left = nullptr;
        node* right = nullptr;
        node* parent = nullptr;
        int height = 1;
        size_t cnt = 1;      // nodes in subtree
        uint64_t w = 0;      // this node's weight
        uint64_t wsum = 0;   // weight sum of subtree
        V val;

        node(uint64_t weight, V v) : w(weight), wsum(weight), val(std::move(v)) {}
    };

    using handle = node*;

    // node found by a positional search, with its in-order rank, the
    // weight accumulated strictly before it, and (for weighted searches)
    // the offset of the query inside the node's weight span
    struct located {
        node* n;
        size_t rank;
        uint64_t start;
        uint64_t offset;
    };

    ost_tree() = default;
    ~ost_tree() { destroy(root_); }

    ost_tree(const ost_tree&) = delete;
    ost_tree& operator=(const ost_tree&) = delete;

    ost_tree(ost_tree&& o) noexcept : root_(o.root_) { o.root_ = nullptr; }
    ost_tree& operator=(ost_tree&& o) noexcept {
        if (this != &o) {
            destroy(root_);
            root_ = o.root_;
            o.root_ = nullptr;
        }
        return *this;
    }

    size_t size() const { return cnt(root_); }
    bool empty() const { return root_ == nullptr; }
    uint64_t total_weight() const { return wsum(root_); }

    // insert a new node so that it becomes the k-th in in-order traversal
    handle insert_at_rank(size_t k, uint64_t weight, V val) {
        assert(k <= size());
        node* n = new node(weight, std::move(val));
        if (!root_) {
            root_ = n;
            return n;
        }
        node* x = root_;
        while (true) {
            if (k <= cnt(x->left)) {
                if (!x->left) {
                    x->left = n;
                    n->parent = x;
                    break;
                }
                x = x->left;
            } else {
                k -= cnt(x->left) + 1;
                if (!x->right) {
                    x->right = n;
                    n->parent = x;
                    break;
                }
                x = x->right;
            }
        }
        retrace(n->parent);
        return n;
    }

    located at_rank(size_t k) const {
        assert(k < size());
        node* x = root_;
        size_t r = 0;
        uint64_t s = 0;
        while (true) {
            if (k < cnt(x->left)) {
                x = x->left;
            } else {
                k -= cnt(x->left);
                r += cnt(x->left);
                s += wsum(x->left);
                if (k == 0) return {x, r, s, 0};
                --k;
                r += 1;
                s += x->w;
                x = x->right;
            }
        }
    }

    // node whose weight span contains weighted position q; nodes of
    // weight zero are transparent
    located find_by_weight(uint64_t q) const {
        assert(q < total_weight());
        node* x = root_;
        size_t r = 0;
        uint64_t s = 0;
        while (true) {
            if (q < wsum(x->left)) {
                x = x->left;
                continue;
            }
            q -= wsum(x->left);
            r += cnt(x->left);
            s += wsum(x->left);
            if (q < x->w) return {x, r, s, q};
            q -= x->w;
            s += x->w;
            r += 1;
            x = x->right;
        }
    }

    // weight sum of the first k nodes
    uint64_t prefix_weight(size_t k) const {
        assert(k <= size());
        if (k == 0) return 0;
        node* x = root_;
        uint64_t s = 0;
        while (true) {
            if (k == cnt(x)) return s + wsum(x);
            if (k <= cnt(x->left)) {
                x = x->left;
            } else {
                k -= cnt(x->left) + 1;
                s += wsum(x->left) + x->w;
                x = x->right;
            }
        }
    }

    size_t rank_of(const node* x) const {
        size_t r = cnt(x->left);
        while (x->parent) {
            if (x == x->parent->right) r += cnt(x->parent->left) + 1;
            x = x->parent;
        }
        return r;
    }

    uint64_t weight_before(const node* x) const {
        uint64_t s = wsum(x->left);
        while (x->parent) {
            if (x == x->parent->right) s += wsum(x->parent->left) + x->parent->w;
            x = x->parent;
        }
        return s;
    }

    void add_weight(handle x, int64_t delta) {
        x->w += delta;
        for (node* y = x; y; y = y->parent) y->wsum += delta;
    }

    // number of leading in-order nodes satisfying pred; pred must be
    // monotone (true on a prefix of the in-order sequence)
    template <typename Pred>
    size_t partition_count(Pred pred) const {
        size_t acc = 0;
        node* x = root_;
        while (x) {
            if (pred(static_cast<const node*>(x))) {
                acc += cnt(x->left) + 1;
                x = x->right;
            } else {
                x = x->left;
            }
        }
        return acc;
    }

    handle first() const {
        node* x = root_;
        if (!x) return nullptr;
        while (x->left) x = x->left;
        return x;
    }

    handle next(handle x) const {
        if (x->right) {
            x = x->right;
            while (x->left) x = x->left;
            return x;
        }
        while (x->parent && x == x->parent->right) x = x->parent;
        return x->parent;
    }

private:
    node* root_ = nullptr;

    static int h(const node* x) { return x ? x->height : 0; }
    static size_t cnt(const node* x) { return x ? x->cnt : 0; }
    static uint64_t wsum(const node* x) { return x ? x->wsum : 0; }

    static void pull(node* x) {
        x->height = 1 + (h(x->left) > h(x->right) ? h(x->left) : h(x->right));
        x->cnt = 1 + cnt(x->left) + cnt(x->right);
        x->wsum = x->w + wsum(x->left) + wsum(x->right);
    }

    node* rotate_left(node* x) {
        node* y = x->right;
        x->right = y->left;
        if (y->left) y->left->parent = x;
        y->parent = x->parent;
        if (x->parent) {
            (x->parent->left == x ? x->parent->left : x->parent->right) = y;
        } else {
            root_ = y;
        }
        y->left = x;
        x->parent = y;
        pull(x);
        pull(y);
        return y;
    }

    node* rotate_right(node* x) {
        node* y = x->left;
        x->left = y->right;
        if (y->right) y->right->parent = x;
        y->parent = x->parent;
        if (x->parent) {
            (x->parent->left == x ? x->parent->left : x->parent->right) = y;
        } else {
            root_ = y;
        }
        y->right = x;
        x->parent = y;
        pull(x);
        pull(y);
        return y;
    }

    void retrace(node* x) {
        while (x) {
            pull(x);
            int bf = h(x->left) - h(x->right);
            if (bf > 1) {
                if (h(x->left->left) >= h(x->left->right)) {
                    x = rotate_right(x);
                } else {
                    rotate_left(x->left);
                    x = rotate_right(x);
                }
            } else if (bf < -1) {
                if (h(x->right->right) >= h(x->right->left)) {
                    x = rotate_left(x);
                } else {
                    rotate_right(x->right);
                    x = rotate_left(x);
                }
            }
            x = x->parent;
        }
    }

    static void destroy(node* x) {
        if (!x) return;
        destroy(x->left);
        destroy(x->right);
        delete x;
    }
};

} // namespace rlz

#endif // RLZ_OST_TREE_HPP_

/*
 * dyn_function.hpp
 *
 * Dynamic partial function from phrase-source text positions to current
 * RLBWT rows, decomposed the classical way: a sorted domain array maps
 * positions to rank space, a gap-encoded bitvector marks codomain rows
 * that are images, and a dynamic permutation (order-statistic tree plus
 * an append-only vector of leaf handles) tracks where each image moved
 * as the codomain grows.
 */

#ifndef RLZ_DYN_FUNCTION_HPP_
#define RLZ_DYN_FUNCTION_HPP_

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rlz/gap_bitvector.hpp"
#include "rlz/ost_tree.hpp"

namespace rlz {

// permutation of {0..k-1} supporting map and append; append(j) shifts
// every image >= j up by one and adds j as the image of the new element
class dyn_permutation {
public:
    size_t size() const { return handles_.size(); }

    void append(uint64_t j) {
        if (j > size()) throw std::out_of_range("dyn_permutation::append");
        handles_.push_back(tree_.insert_at_rank(static_cast<size_t>(j), 1, {}));
    }

    uint64_t map(size_t i) const {
        if (i >= size()) throw std::out_of_range("dyn_permutation::map");
        return tree_.rank_of(handles_[i]);
    }

    size_t node_count() const { return tree_.size(); }

private:
    struct empty {};
    ost_tree<empty> tree_;
    std::vector<ost_tree<empty>::handle> handles_;
};

class dyn_function {
public:
    // domain = sorted, deduplicated sources
    explicit dyn_function(std::vector<uint64_t> sources) : domain_(std::move(sources)) {
        std::sort(domain_.begin(), domain_.end());
        domain_.erase(std::unique(domain_.begin(), domain_.end()), domain_.end());
    }

    const std::vector<uint64_t>& domain() const { return domain_; }

    size_t assigned_count() const { return perm_.size(); }
    size_t codomain_size() const { return marks_.size(); }

    bool in_domain(uint64_t i) const {
        return std::binary_search(domain_.begin(), domain_.end(), i);
    }

    bool is_assigned(uint64_t i) const {
        size_t r = domain_rank(i);
        return r < domain_.size() && domain_[r] == i && r < perm_.size();
    }

    // shift every image >= j up by one; codomain grows by one
    void expand(uint64_t j) {
        if (j > marks_.size()) throw std::out_of_range("dyn_function::expand");
        marks_.insert(static_cast<size_t>(j), false);
    }

    // expand(j), then set the image of i to j; assigns must arrive with
    // strictly increasing i
    void assign(uint64_t i, uint64_t j) {
        size_t r = domain_rank(i);
        if (r >= domain_.size() || domain_[r] != i)
            throw std::invalid_argument("dyn_function::assign: position not in domain");
        if (r != perm_.size())
            throw std::invalid_argument("dyn_function::assign: non-monotone assignment order");
        if (j > marks_.size()) throw std::out_of_range("dyn_function::assign");
        marks_.insert(static_cast<size_t>(j), true);
        perm_.append(marks_.rank1(static_cast<size_t>(j)));
    }

    uint64_t map(uint64_t i) const {
        size_t r = domain_rank(i);
        if (r >= domain_.size() || domain_[r] != i)
            throw std::invalid_argument("dyn_function::map: position not in domain");
        if (r >= perm_.size())
            throw std::invalid_argument("dyn_function::map: position not assigned yet");
        return marks_.select1(static_cast<size_t>(perm_.map(r)));
    }

    size_t node_count() const { return perm_.node_count() + marks_.node_count(); }

private:
    std::vector<uint64_t> domain_;
    gap_bitvector marks_; // C: marks codomain rows that are images
    dyn_permutation perm_;

    size_t domain_rank(uint64_t i) const {
        return static_cast<size_t>(
            std::lower_bound(domain_.begin(), domain_.end(), i) - domain_.begin());
    }
};

} // namespace rlz

#endif // RLZ_DYN_FUNCTION_HPP_

// Copyright 2026 The fsp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace fsp {

// Sorted, duplicate-free vector with value semantics. Small sets dominate
// this code base, so contiguous storage beats node-based containers.
template <class T>
class FlatSet {
public:
    using value_type     = T;
    using const_iterator = typename std::vector<T>::const_iterator;

    FlatSet() = default;
    FlatSet(std::initializer_list<T> xs) : items_(xs) { normalize(); }
    explicit FlatSet(std::vector<T> xs) : items_(std::move(xs)) { normalize(); }
    template <class It>
    FlatSet(It first, It last) : items_(first, last) { normalize(); }

    const_iterator begin() const { return items_.begin(); }
    const_iterator end() const { return items_.end(); }
    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const T& operator[](std::size_t i) const { return items_[i]; }
    const std::vector<T>& items() const { return items_; }

    bool contains(const T& x) const { return std::binary_search(items_.begin(), items_.end(), x); }

    bool insert(const T& x) {
        auto it = std::lower_bound(items_.begin(), items_.end(), x);
        if (it != items_.end() && !(x < *it)) return false;
        items_.insert(it, x);
        return true;
    }
    bool erase(const T& x) {
        auto it = std::lower_bound(items_.begin(), items_.end(), x);
        if (it == items_.end() || x < *it) return false;
        items_.erase(it);
        return true;
    }
    template <class Pred>
    void erase_if(Pred p) {
        items_.erase(std::remove_if(items_.begin(), items_.end(), p), items_.end());
    }

    bool subset_of(const FlatSet& o) const {
        return std::includes(o.items_.begin(), o.items_.end(), items_.begin(), items_.end());
    }
    bool proper_subset_of(const FlatSet& o) const { return size() < o.size() && subset_of(o); }
    bool intersects(const FlatSet& o) const {
        auto a = items_.begin(), b = o.items_.begin();
        while (a != items_.end() && b != o.items_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return true;
        }
        return false;
    }

    friend FlatSet operator|(const FlatSet& a, const FlatSet& b) {
        FlatSet r;
        r.items_.reserve(a.size() + b.size());
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
        return r;
    }
    friend FlatSet operator&(const FlatSet& a, const FlatSet& b) {
        FlatSet r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
        return r;
    }
    friend FlatSet operator-(const FlatSet& a, const FlatSet& b) {
        FlatSet r;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
        return r;
    }
    // Symmetric difference.
    friend FlatSet operator^(const FlatSet& a, const FlatSet& b) {
        FlatSet r;
        std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r.items_));
        return r;
    }
    FlatSet& operator|=(const FlatSet& o) { return *this = *this | o; }

    friend bool operator==(const FlatSet&, const FlatSet&) = default;
    friend auto operator<=>(const FlatSet& a, const FlatSet& b) {
        return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
    }

private:
    void normalize() {
        std::sort(items_.begin(), items_.end());
        items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    }
    std::vector<T> items_;
};

}  // namespace fsp

// Copyright 2026 The surfsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace surfsim {

/// Fixed-length bit vector packed into 64-bit words. Bits past size() are kept zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits) : words_((num_bits + 63) / 64, 0), size_(num_bits) {}

    size_t size() const { return size_; }
    size_t num_words() const { return words_.size(); }

    bool get(size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1; }
    void set(size_t k, bool value) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) { words_[k >> 6] ^= uint64_t{1} << (k & 63); }
    bool operator[](size_t k) const { return get(k); }

    uint64_t *words() { return words_.data(); }
    const uint64_t *words() const { return words_.data(); }

    BitVector &operator^=(const BitVector &other) {
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }

    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }

    size_t popcount() const {
        size_t total = 0;
        for (uint64_t w : words_) {
            total += std::popcount(w);
        }
        return total;
    }

    /// Parity of the bitwise AND with another vector of the same length.
    bool and_parity(const BitVector &other) const {
        uint64_t acc = 0;
        for (size_t w = 0; w < words_.size(); w++) {
            acc ^= words_[w] & other.words_[w];
        }
        return std::popcount(acc) & 1;
    }

    void clear() {
        for (uint64_t &w : words_) {
            w = 0;
        }
    }

    bool operator==(const BitVector &other) const = default;

   private:
    std::vector<uint64_t> words_;
    size_t size_ = 0;
};

}  // namespace surfsim

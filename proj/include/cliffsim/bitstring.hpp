// Copyright 2026 The cliffsim authors
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
#include <cstdint>
#include <string>
#include <vector>

#include "cliffsim/errors.hpp"

namespace cliffsim {

/// A length-n string over {0,1}, bit-packed into 64-bit words.
/// Supports XOR and the mod-2 inner product; unused tail bits are kept zero.
class BitString {
  public:
    BitString() = default;

    explicit BitString(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    static BitString from_string(const std::string& s) {
        BitString b(s.size());
        for (size_t i = 0; i < s.size(); i++) {
            if (s[i] == '1') {
                b.set(i, true);
            } else if (s[i] != '0') {
                throw DimensionError("bitstring character must be 0 or 1");
            }
        }
        return b;
    }

    size_t size() const { return n_; }

    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(size_t i, bool v) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (v) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }

    void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    void xor_with(const BitString& other) {
        check_same_size(other);
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= other.words_[w];
        }
    }

    BitString operator^(const BitString& other) const {
        BitString r = *this;
        r.xor_with(other);
        return r;
    }

    /// Mod-2 inner product a.b = a_1 b_1 + ... + a_n b_n.
    bool dot(const BitString& other) const {
        check_same_size(other);
        uint64_t acc = 0;
        for (size_t w = 0; w < words_.size(); w++) {
            acc ^= words_[w] & other.words_[w];
        }
        return std::popcount(acc) & 1;
    }

    bool is_zero() const {
        for (uint64_t w : words_) {
            if (w != 0) return false;
        }
        return true;
    }

    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool operator==(const BitString& other) const = default;

    std::string to_string() const {
        std::string s(n_, '0');
        for (size_t i = 0; i < n_; i++) {
            if (get(i)) s[i] = '1';
        }
        return s;
    }

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

  private:
    void check_same_size(const BitString& other) const {
        if (n_ != other.n_) {
            throw DimensionError("bitstring length mismatch");
        }
    }

    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace cliffsim

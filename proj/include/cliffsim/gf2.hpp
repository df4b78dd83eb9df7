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

#include <cstdint>
#include <vector>

#include "cliffsim/bitstring.hpp"

namespace cliffsim {

/// A rows x cols matrix over GF(2), row-major, rows bit-packed in 64-bit
/// words. Row operations (XOR) are word-wise.
class BitMatrix {
  public:
    BitMatrix() = default;

    BitMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          data_(rows * words_per_row_, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    bool get(size_t r, size_t c) const {
        return (data_[r * words_per_row_ + (c >> 6)] >> (c & 63)) & 1;
    }

    void set(size_t r, size_t c, bool v) {
        uint64_t mask = uint64_t{1} << (c & 63);
        uint64_t& w = data_[r * words_per_row_ + (c >> 6)];
        if (v) {
            w |= mask;
        } else {
            w &= ~mask;
        }
    }

    void xor_row_into(size_t src, size_t dst) {
        const uint64_t* s = &data_[src * words_per_row_];
        uint64_t* d = &data_[dst * words_per_row_];
        for (size_t w = 0; w < words_per_row_; w++) d[w] ^= s[w];
    }

    BitString matvec(const BitString& t) const {
        if (t.size() != cols_) throw DimensionError("matvec dimension mismatch");
        BitString out(rows_);
        for (size_t r = 0; r < rows_; r++) {
            uint64_t acc = 0;
            const uint64_t* row = &data_[r * words_per_row_];
            for (size_t w = 0; w < words_per_row_; w++) {
                acc ^= row[w] & t.words()[w];
            }
            out.set(r, std::popcount(acc) & 1);
        }
        return out;
    }

    bool operator==(const BitMatrix& other) const = default;

  private:
    friend size_t gf2_rank(BitMatrix A);
    friend std::vector<BitString> kernel_basis(const BitMatrix& A);

    size_t rows_ = 0, cols_ = 0, words_per_row_ = 0;
    std::vector<uint64_t> data_;
};

inline BitString matvec(const BitMatrix& A, const BitString& t) { return A.matvec(t); }

/// Rank via in-place elimination (first-nonzero-column pivoting).
inline size_t gf2_rank(BitMatrix A) {
    size_t rank = 0;
    for (size_t c = 0; c < A.cols_ && rank < A.rows_; c++) {
        size_t pivot = rank;
        while (pivot < A.rows_ && !A.get(pivot, c)) pivot++;
        if (pivot == A.rows_) continue;
        if (pivot != rank) A.xor_row_into(pivot, rank);  // bring pivot row up
        for (size_t r = 0; r < A.rows_; r++) {
            if (r != rank && A.get(r, c)) A.xor_row_into(rank, r);
        }
        rank++;
    }
    return rank;
}

/// Basis of {t : A t = 0}. Deterministic: columns are scanned left to right,
/// the first row with a 1 in the current column becomes the pivot, and free
/// columns yield basis vectors in ascending column order.
inline std::vector<BitString> kernel_basis(const BitMatrix& A) {
    BitMatrix R = A;
    std::vector<size_t> pivot_col;  // pivot_col[k] = column of k-th pivot row
    size_t rank = 0;
    for (size_t c = 0; c < R.cols_ && rank < R.rows_; c++) {
        size_t pivot = rank;
        while (pivot < R.rows_ && !R.get(pivot, c)) pivot++;
        if (pivot == R.rows_) continue;
        if (pivot != rank) {
            // swap rows by XOR (A ^= B, B ^= A, A ^= B)
            R.xor_row_into(pivot, rank);
            R.xor_row_into(rank, pivot);
            R.xor_row_into(pivot, rank);
        }
        for (size_t r = 0; r < R.rows_; r++) {
            if (r != rank && R.get(r, c)) R.xor_row_into(rank, r);
        }
        pivot_col.push_back(c);
        rank++;
    }
    std::vector<bool> is_pivot(R.cols_, false);
    for (size_t c : pivot_col) is_pivot[c] = true;

    std::vector<BitString> basis;
    for (size_t f = 0; f < R.cols_; f++) {
        if (is_pivot[f]) continue;
        BitString t(R.cols_);
        t.set(f, true);
        for (size_t k = 0; k < pivot_col.size(); k++) {
            if (R.get(k, f)) t.set(pivot_col[k], true);
        }
        basis.push_back(std::move(t));
    }
    return basis;
}

}  // namespace cliffsim

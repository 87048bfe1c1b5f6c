#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace polarbf {

// Dense bit-packed matrix over GF(2), 64 columns per word.
class Gf2Matrix {
  public:
    Gf2Matrix(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    int get(size_t r, size_t c) const { return row(r)[c >> 6] >> (c & 63) & 1; }
    void set(size_t r, size_t c, int bit);

    uint64_t* row(size_t r) { return data_.data() + r * words_; }
    const uint64_t* row(size_t r) const { return data_.data() + r * words_; }
    size_t words_per_row() const { return words_; }

    // Basis of {x : A x = 0}, as bit vectors of length cols().  Basis vectors
    // are emitted in ascending order of their free column, so the result is
    // deterministic for a fixed column order.
    std::vector<std::vector<uint64_t>> kernel_basis() const;
    size_t rank() const;

  private:
    size_t rows_, cols_, words_;
    std::vector<uint64_t> data_;
};

// Incremental linear-dependency detector over GF(2).  Vectors of a fixed
// length are added one at a time; the first vector that is linearly
// dependent on the ones added before it yields the dependency combination
// (a bit mask over the indices of added vectors, current one included).
class IncrementalDependency {
  public:
    // len: bit length of added vectors; max_vectors: capacity for the
    // combination bookkeeping.
    IncrementalDependency(size_t len, size_t max_vectors);

    size_t added() const { return added_; }

    // Returns the dependency combination if v is in the span of previous
    // vectors, otherwise stores it and returns nullopt.
    std::optional<std::vector<uint64_t>> add(std::vector<uint64_t> v);

  private:
    size_t len_words_, comb_words_, added_ = 0;
    struct PivotRow {
        size_t pivot;
        std::vector<uint64_t> vec;
        std::vector<uint64_t> comb;
    };
    std::vector<PivotRow> pivots_;
};

}  // namespace polarbf

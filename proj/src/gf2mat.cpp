#include "polarbf/gf2mat.hpp"

#include <bit>
#include <stdexcept>

namespace polarbf {

namespace {

inline size_t first_set_bit(const std::vector<uint64_t>& v) {
    for (size_t w = 0; w < v.size(); ++w)
        if (v[w]) return (w << 6) + static_cast<size_t>(std::countr_zero(v[w]));
    return ~size_t{0};
}

inline void xor_into(std::vector<uint64_t>& dst, const std::vector<uint64_t>& src) {
    for (size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
}

}  // namespace

Gf2Matrix::Gf2Matrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {
    if (cols == 0) words_ = 1, data_.assign(std::max<size_t>(rows, 1), 0);
}

void Gf2Matrix::set(size_t r, size_t c, int bit) {
    uint64_t m = 1ull << (c & 63);
    if (bit)
        row(r)[c >> 6] |= m;
    else
        row(r)[c >> 6] &= ~m;
}

std::vector<std::vector<uint64_t>> Gf2Matrix::kernel_basis() const {
    Gf2Matrix a(*this);
    std::vector<size_t> pivot_col;        // pivot column of echelon row i
    std::vector<char> is_pivot(cols_, 0);
    size_t r = 0;
    for (size_t c = 0; c < cols_ && r < rows_; ++c) {
        size_t piv = rows_;
        for (size_t i = r; i < rows_; ++i)
            if (a.get(i, c)) { piv = i; break; }
        if (piv == rows_) continue;
        if (piv != r)
            for (size_t w = 0; w < words_; ++w) std::swap(a.row(r)[w], a.row(piv)[w]);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == r || !a.get(i, c)) continue;
            for (size_t w = 0; w < words_; ++w) a.row(i)[w] ^= a.row(r)[w];
        }
        pivot_col.push_back(c);
        is_pivot[c] = 1;
        ++r;
    }
    std::vector<std::vector<uint64_t>> basis;
    for (size_t fc = 0; fc < cols_; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<uint64_t> x(words_, 0);
        x[fc >> 6] |= 1ull << (fc & 63);
        for (size_t i = 0; i < pivot_col.size(); ++i)
            if (a.get(i, fc)) x[pivot_col[i] >> 6] |= 1ull << (pivot_col[i] & 63);
        basis.push_back(std::move(x));
    }
    return basis;
}

size_t Gf2Matrix::rank() const {
    return cols_ - kernel_basis().size();
}

IncrementalDependency::IncrementalDependency(size_t len, size_t max_vectors)
    : len_words_((len + 63) / 64), comb_words_((max_vectors + 63) / 64) {
    if (len_words_ == 0) len_words_ = 1;
    if (comb_words_ == 0) comb_words_ = 1;
}

std::optional<std::vector<uint64_t>> IncrementalDependency::add(std::vector<uint64_t> v) {
    if (v.size() != len_words_) throw std::invalid_argument("vector length mismatch");
    std::vector<uint64_t> comb(comb_words_, 0);
    const size_t idx = added_++;
    if (idx >= comb_words_ * 64) throw std::length_error("IncrementalDependency capacity exceeded");
    comb[idx >> 6] |= 1ull << (idx & 63);
    for (const auto& p : pivots_) {
        if (v[p.pivot >> 6] >> (p.pivot & 63) & 1) {
            xor_into(v, p.vec);
            xor_into(comb, p.comb);
        }
    }
    const size_t piv = first_set_bit(v);
    if (piv == ~size_t{0}) return comb;
    pivots_.push_back({piv, std::move(v), std::move(comb)});
    return std::nullopt;
}

}  // namespace polarbf

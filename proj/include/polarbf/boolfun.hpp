#pragma once

#include <cstdint>
#include <vector>

#include "polarbf/field.hpp"

namespace polarbf {

// Truth table of an n-variable Boolean function, one bit per point.
// Bit v is f at the field element whose polynomial-basis coordinates
// are the bits of v.
class TruthTable {
  public:
    TruthTable() = default;
    explicit TruthTable(int n);

    int vars() const { return n_; }
    uint64_t size() const { return 1ull << n_; }
    int get(uint64_t v) const { return words_[v >> 6] >> (v & 63) & 1; }
    void set(uint64_t v, int bit);
    void flip_all();

    uint64_t weight() const;
    bool is_balanced() const { return weight() == size() / 2; }

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

    bool operator==(const TruthTable&) const = default;

  private:
    int n_ = 0;
    std::vector<uint64_t> words_;
};

// ANF coefficient vector: bit at mask I is the coefficient of the
// monomial prod_{i in I} x_i.
class AnfForm {
  public:
    AnfForm() = default;
    explicit AnfForm(int n) : tt_(n) {}

    int vars() const { return tt_.vars(); }
    int get(uint64_t mask) const { return tt_.get(mask); }
    void set(uint64_t mask, int bit) { tt_.set(mask, bit); }
    uint64_t coeff_count() const { return tt_.weight(); }
    int degree() const;  // 0 for the zero function
    int evaluate(uint64_t point) const;

    TruthTable& raw() { return tt_; }
    const TruthTable& raw() const { return tt_; }

    bool operator==(const AnfForm&) const = default;

  private:
    TruthTable tt_;
};

// Univariate representation: f(x) = sum f_i x^i with f_i in GF(2^n),
// f_0 and f_{2^n-1} in {0,1}.
struct UnivariateForm {
    FieldPtr field;
    std::vector<uint32_t> coeffs;  // size 2^n, element bit patterns

    bool operator==(const UnivariateForm& o) const {
        return field == o.field && coeffs == o.coeffs;
    }
};

// Polar/bivariate coefficients f'(y,z) = sum_{j,k} f'_{j,k} y^j z^k,
// grid is (2^m-1) x (2^m+1), plus the constant bit f_0 = f(0).
struct BivariateCoeffs {
    FieldPtr field;
    int m = 0;
    std::vector<uint32_t> grid;  // row-major, grid[j*(2^m+1)+k]
    int constant = 0;

    uint32_t at(int j, int k) const { return grid[static_cast<size_t>(j) * ((1u << m) + 1) + k]; }
};

TruthTable from_support(const FieldPtr& field, const std::vector<FieldElement>& support);
std::vector<FieldElement> support_of(const FieldPtr& field, const TruthTable& tt);

AnfForm anf_of(const TruthTable& tt);
TruthTable tt_of(const AnfForm& anf);

UnivariateForm univariate_interpolate(const TruthTable& tt, const FieldPtr& field);
int univariate_degree(const UnivariateForm& uf);
int univariate_evaluate(const UnivariateForm& uf, FieldElement x);
TruthTable tt_of_univariate(const UnivariateForm& uf);

BivariateCoeffs bivariate_of(const UnivariateForm& uf);
UnivariateForm univariate_of_bivariate(const BivariateCoeffs& bc);

}  // namespace polarbf

#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace polarbf {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// An element of GF(2^n) in polynomial-basis coordinates: bit i of `bits`
// is the coefficient of x^i.  Elements carry a pointer to their field;
// mixing elements of different fields throws.
struct FieldElement {
    uint32_t bits = 0;
    const Field* field = nullptr;

    bool is_zero() const { return bits == 0; }
    bool operator==(const FieldElement&) const = default;
};

struct PolarPair {
    FieldElement y;  // in F_{2^m}^*
    FieldElement z;  // in U, the subgroup of order 2^m+1
};

// GF(2^n) with a fixed Conway-polynomial modulus and a designated
// primitive element alpha.  For most n alpha is the residue class of x;
// for a few n it is a calibrated power of it (see field.cpp).
// Immutable after construction.
class Field {
  public:
    static FieldPtr make(int n);

    int degree() const { return n_; }
    int half_degree() const { return n_ / 2; }
    uint32_t modulus() const { return modulus_; }
    uint32_t order() const { return ord_; }           // 2^n - 1
    uint32_t generator_exponent() const { return gen_exp_; }

    FieldElement zero() const { return {0, this}; }
    FieldElement one() const { return {1, this}; }
    FieldElement alpha() const { return alpha_power(1); }
    FieldElement beta() const { return alpha_power((1u << half_degree()) + 1); }
    FieldElement xi() const { return alpha_power((1u << half_degree()) - 1); }

    // Element whose polynomial-basis coordinates are the bits of v.
    FieldElement element(uint32_t v) const;
    // alpha^e, exponent taken mod 2^n-1 (negative exponents allowed).
    FieldElement alpha_power(int64_t e) const;
    // Discrete log of a nonzero element with respect to alpha.
    uint32_t log(FieldElement a) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, int64_t e) const;
    FieldElement sqrt(FieldElement a) const;
    int trace(FieldElement a) const;
    // Relative trace to F_2 of the subfield F_{2^m}: sum of a^{2^i}, i < m.
    int subfield_trace(FieldElement a) const;

    bool in_subfield(FieldElement a) const;  // a^{2^m} == a
    bool in_subgroup_u(FieldElement a) const;

    PolarPair polar_decompose(FieldElement x) const;
    // [xi^0, xi^1, ..., xi^{2^m}]
    std::vector<FieldElement> subgroup_u() const;
    // [0, beta^0, beta^1, ..., beta^{2^m-2}] = the subfield F_{2^m}
    std::vector<FieldElement> subfield() const;

  private:
    Field(int n, uint32_t modulus, uint32_t gen_exp);
    void check(FieldElement a) const;

    int n_;
    uint32_t modulus_;
    uint32_t ord_;
    uint32_t gen_exp_;
    std::vector<uint32_t> exp_;  // exp_[i] = alpha^i, i in [0, 2^n-1)
    std::vector<uint32_t> log_;  // log_[alpha^i] = i; log_[0] unused
};

}  // namespace polarbf

#pragma once

#include <cstdint>
#include <vector>

#include "polarbf/boolfun.hpp"
#include "polarbf/field.hpp"

namespace polarbf {

// Support {beta^{s+t} z : 0 <= t < 2^{m-1}, z in U}; weight 2^{n-1} + 2^{m-1}.
TruthTable construction1(const FieldPtr& field, int shift = 0);

// Balanced: (Gamma x U) u ({1} x {1, xi, ..., xi^{2^{m-1}}}) with
// Gamma = {beta, ..., beta^{2^{m-1}-1}}; weight 2^{n-1}.
TruthTable construction2(const FieldPtr& field);

// Balanced variant: ({1, beta, ..., beta^{2^{m-1}-2}} x U) u
// ({beta^{2^{m-1}-1}} x {1, xi, ..., xi^{2^{m-1}}}).
TruthTable construction2_alt(const FieldPtr& field);

// (Gamma x U) u ({1} x lambda_prime) for any subset of U of size 2^{m-1}+1.
TruthTable construction2_general(const FieldPtr& field,
                                 const std::vector<FieldElement>& lambda_prime);

// Seeded pseudorandom lambda_prime of the right cardinality.
std::vector<FieldElement> random_lambda_prime(const FieldPtr& field, uint64_t seed);

// Comparator family: support {0, 1, alpha, ..., alpha^{2^{n-1}-2}}.
TruthTable carlet_feng(const FieldPtr& field);

// Univariate coefficients of construction2 computed from the closed-form
// two-case formula (geometric sums split on divisibility by 2^m+1).
UnivariateForm closed_form_coeffs(const FieldPtr& field);

}  // namespace polarbf

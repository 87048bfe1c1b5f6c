#include "polarbf/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace polarbf {

namespace {

void require_m_at_least(const FieldPtr& field, int min_m) {
    if (field->half_degree() < min_m)
        throw std::invalid_argument("construction requires m >= " + std::to_string(min_m));
}

}  // namespace

TruthTable construction1(const FieldPtr& field, int shift) {
    require_m_at_least(field, 1);
    const int m = field->half_degree();
    if (shift < 0 || shift > (1 << m) - 2)
        throw std::invalid_argument("shift must lie in [0, 2^m-2]");
    const int64_t be = (1ll << m) + 1, xe = (1ll << m) - 1;
    std::vector<FieldElement> supp;
    for (int t = 0; t < (1 << (m - 1)); ++t)
        for (int k = 0; k <= (1 << m); ++k)
            supp.push_back(field->alpha_power(be * (shift + t) + xe * k));
    return from_support(field, supp);
}

TruthTable construction2(const FieldPtr& field) {
    require_m_at_least(field, 2);
    const int m = field->half_degree();
    const int64_t be = (1ll << m) + 1, xe = (1ll << m) - 1;
    std::vector<FieldElement> supp;
    for (int t = 1; t < (1 << (m - 1)); ++t)
        for (int k = 0; k <= (1 << m); ++k)
            supp.push_back(field->alpha_power(be * t + xe * k));
    for (int k = 0; k <= (1 << (m - 1)); ++k) supp.push_back(field->alpha_power(xe * k));
    return from_support(field, supp);
}

TruthTable construction2_alt(const FieldPtr& field) {
    require_m_at_least(field, 2);
    const int m = field->half_degree();
    const int64_t be = (1ll << m) + 1, xe = (1ll << m) - 1;
    std::vector<FieldElement> supp;
    for (int t = 0; t < (1 << (m - 1)) - 1; ++t)
        for (int k = 0; k <= (1 << m); ++k)
            supp.push_back(field->alpha_power(be * t + xe * k));
    const int64_t top = be * ((1 << (m - 1)) - 1);
    for (int k = 0; k <= (1 << (m - 1)); ++k) supp.push_back(field->alpha_power(top + xe * k));
    return from_support(field, supp);
}

TruthTable construction2_general(const FieldPtr& field,
                                 const std::vector<FieldElement>& lambda_prime) {
    require_m_at_least(field, 2);
    const int m = field->half_degree();
    const size_t want = (size_t{1} << (m - 1)) + 1;
    std::set<uint32_t> distinct;
    for (const auto& z : lambda_prime) {
        if (z.field != field.get())
            throw std::invalid_argument("lambda_prime element from a different field");
        if (!field->in_subgroup_u(z))
            throw std::invalid_argument("lambda_prime element outside the subgroup U");
        distinct.insert(z.bits);
    }
    if (distinct.size() != want)
        throw std::invalid_argument("lambda_prime must have exactly 2^{m-1}+1 distinct elements, got " +
                                    std::to_string(distinct.size()));
    const int64_t be = (1ll << m) + 1, xe = (1ll << m) - 1;
    std::vector<FieldElement> supp;
    for (int t = 1; t < (1 << (m - 1)); ++t)
        for (int k = 0; k <= (1 << m); ++k)
            supp.push_back(field->alpha_power(be * t + xe * k));
    supp.insert(supp.end(), lambda_prime.begin(), lambda_prime.end());
    return from_support(field, supp);
}

std::vector<FieldElement> random_lambda_prime(const FieldPtr& field, uint64_t seed) {
    auto u = field->subgroup_u();
    std::mt19937_64 rng(seed);
    std::shuffle(u.begin(), u.end(), rng);
    u.resize((size_t{1} << (field->half_degree() - 1)) + 1);
    return u;
}

TruthTable carlet_feng(const FieldPtr& field) {
    const int n = field->degree();
    std::vector<FieldElement> supp{field->zero()};
    for (int64_t i = 0; i <= (1ll << (n - 1)) - 2; ++i) supp.push_back(field->alpha_power(i));
    return from_support(field, supp);
}

UnivariateForm closed_form_coeffs(const FieldPtr& field) {
    require_m_at_least(field, 2);
    const int n = field->degree();
    const int m = field->half_degree();
    const uint32_t N = field->order();
    const uint32_t pm1 = (1u << m) + 1;

    UnivariateForm uf{field, std::vector<uint32_t>(size_t{1} << n, 0)};
    for (uint32_t idx = 1; idx < N; ++idx) {
        // The two-case formula is stated for the support written with every
        // exponent scaled by 2^{m-1}; composing the index with the inverse
        // power 2^{m+1} yields the coefficients of the literal construction.
        const uint32_t i =
            static_cast<uint32_t>((static_cast<uint64_t>(idx) << (m + 1)) % N);
        FieldElement coeff = field->zero();
        if (i % pm1 != 0) {
            // Lambda part: sum_{k=0}^{2^{m-1}} q^k with q = alpha^{-i 2^{m-1}(2^m-1)}
            const int64_t qe = -static_cast<int64_t>(i) % N * (1ll << (m - 1)) % N *
                               ((1ll << m) - 1) % N;
            const FieldElement q = field->alpha_power(qe);
            const FieldElement den = field->add(field->one(), q);
            if (den.is_zero()) throw std::logic_error("vanishing denominator in the coprime branch");
            const FieldElement num =
                field->add(field->one(), field->pow(q, (1ll << (m - 1)) + 1));
            coeff = field->mul(num, field->inv(den));
        } else {
            // Gamma part plus 1: 1 + x(1 - x^{2^{m-1}-1})/(1 - x), x = alpha^{-i};
            // when x^{2^{m-1}-1} = 1 the quotient is taken as the geometric sum.
            const FieldElement x = field->alpha_power(-static_cast<int64_t>(i));
            const FieldElement xl = field->pow(x, (1ll << (m - 1)) - 1);
            FieldElement quot;
            if (xl == field->one()) {
                quot = field->zero();
                FieldElement xp = x;
                for (int t = 1; t <= (1 << (m - 1)) - 1; ++t) {
                    quot = field->add(quot, xp);
                    xp = field->mul(xp, x);
                }
            } else {
                const FieldElement den = field->add(field->one(), x);
                if (den.is_zero())
                    throw std::logic_error("vanishing denominator in the divisible branch");
                quot = field->mul(field->mul(x, field->add(field->one(), xl)), field->inv(den));
            }
            coeff = field->add(field->one(), quot);
        }
        uf.coeffs[idx] = coeff.bits;
    }
    uf.coeffs[0] = 0;
    uf.coeffs[N] = 0;
    return uf;
}

}  // namespace polarbf

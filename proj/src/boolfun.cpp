#include "polarbf/boolfun.hpp"

#include <bit>
#include <stdexcept>

#include "polarbf/spectra.hpp"

namespace polarbf {

TruthTable::TruthTable(int n) : n_(n) {
    if (n < 0 || n > 24) throw std::invalid_argument("unsupported variable count");
    words_.assign(std::max<uint64_t>(1, (1ull << n) >> 6), 0);
}

void TruthTable::set(uint64_t v, int bit) {
    const uint64_t m = 1ull << (v & 63);
    if (bit)
        words_[v >> 6] |= m;
    else
        words_[v >> 6] &= ~m;
}

void TruthTable::flip_all() {
    for (auto& w : words_) w = ~w;
    if (n_ < 6) words_[0] &= (1ull << (1ull << n_)) - 1;
}

uint64_t TruthTable::weight() const {
    uint64_t w = 0;
    for (uint64_t x : words_) w += std::popcount(x);
    return w;
}

namespace {

// In-place binary Moebius (zeta) transform; involutive over GF(2).
void moebius(std::vector<uint64_t>& words, int n) {
    static constexpr uint64_t kMask[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
    for (int i = 0; i < std::min(n, 6); ++i)
        for (auto& w : words) w ^= (w & kMask[i]) << (1 << i);
    for (int i = 6; i < n; ++i) {
        const size_t stride = size_t{1} << (i - 6);
        for (size_t base = 0; base < words.size(); base += 2 * stride)
            for (size_t j = 0; j < stride; ++j) words[base + stride + j] ^= words[base + j];
    }
}

}  // namespace

TruthTable from_support(const FieldPtr& field, const std::vector<FieldElement>& support) {
    TruthTable tt(field->degree());
    for (const auto& e : support) {
        if (e.field != field.get())
            throw std::invalid_argument("support element from a different field");
        tt.set(e.bits, 1);
    }
    return tt;
}

std::vector<FieldElement> support_of(const FieldPtr& field, const TruthTable& tt) {
    if (tt.vars() != field->degree())
        throw std::invalid_argument("table and field dimension mismatch");
    std::vector<FieldElement> s;
    for (uint64_t v = 0; v < tt.size(); ++v)
        if (tt.get(v)) s.push_back(field->element(static_cast<uint32_t>(v)));
    return s;
}

AnfForm anf_of(const TruthTable& tt) {
    AnfForm a(tt.vars());
    a.raw() = tt;
    moebius(a.raw().words(), tt.vars());
    return a;
}

TruthTable tt_of(const AnfForm& anf) {
    TruthTable tt = anf.raw();
    moebius(tt.words(), tt.vars());
    return tt;
}

int AnfForm::degree() const {
    int deg = 0;
    for (uint64_t mask = 0; mask < tt_.size(); ++mask)
        if (tt_.get(mask)) deg = std::max(deg, std::popcount(mask));
    return deg;
}

int AnfForm::evaluate(uint64_t point) const {
    int acc = 0;
    for (uint64_t mask = 0; mask < tt_.size(); ++mask)
        if (tt_.get(mask) && (mask & point) == mask) acc ^= 1;
    return acc;
}

UnivariateForm univariate_interpolate(const TruthTable& tt, const FieldPtr& field) {
    const int n = field->degree();
    if (tt.vars() != n) throw std::invalid_argument("table and field dimension mismatch");
    const uint32_t N = field->order();

    UnivariateForm uf{field, std::vector<uint32_t>(size_t{1} << n, 0)};
    // Mattson-Solomon: f'_i = sum over nonzero support points c of c^{-i}
    std::vector<uint32_t> acc(N, 0);
    uint32_t nonzero_support = 0;
    for (uint64_t v = 1; v < tt.size(); ++v) {
        if (!tt.get(v)) continue;
        ++nonzero_support;
        const uint32_t t = field->log(field->element(static_cast<uint32_t>(v)));
        uint32_t e = 0;
        for (uint32_t i = 0; i < N; ++i) {
            acc[i] ^= field->alpha_power(e).bits;
            e = e >= t ? e - t : e + N - t;
        }
    }
    const int f0 = tt.get(0);
    uf.coeffs[0] = static_cast<uint32_t>(f0);
    for (uint32_t i = 1; i < N; ++i) uf.coeffs[i] = acc[i];
    // top coefficient makes evaluation at nonzero points match: f'_0 = parity
    // of the nonzero support, and f_{2^n-1} = f_0 + f'_0
    uf.coeffs[N] = static_cast<uint32_t>(f0 ^ (nonzero_support & 1));
    return uf;
}

int univariate_degree(const UnivariateForm& uf) {
    int deg = 0;
    for (size_t i = 0; i < uf.coeffs.size(); ++i)
        if (uf.coeffs[i]) deg = std::max(deg, std::popcount(i));
    return deg;
}

int univariate_evaluate(const UnivariateForm& uf, FieldElement x) {
    const Field& F = *uf.field;
    if (x.field != uf.field.get())
        throw std::invalid_argument("evaluation point from a different field");
    if (x.is_zero()) return static_cast<int>(uf.coeffs[0]);
    const uint32_t N = F.order();
    const uint64_t t = F.log(x);
    uint32_t acc = uf.coeffs[0];
    for (uint64_t i = 1; i <= N; ++i) {
        if (!uf.coeffs[i]) continue;
        const uint64_t e = (F.log({uf.coeffs[i], &F}) + i % N * t) % N;
        acc ^= F.alpha_power(static_cast<int64_t>(e)).bits;
    }
    if (acc > 1) throw std::logic_error("univariate form does not evaluate to GF(2)");
    return static_cast<int>(acc);
}

TruthTable tt_of_univariate(const UnivariateForm& uf) {
    const int n = uf.field->degree();
    TruthTable tt(n);
    for (uint64_t v = 0; v < tt.size(); ++v)
        tt.set(v, univariate_evaluate(uf, uf.field->element(static_cast<uint32_t>(v))));
    return tt;
}

BivariateCoeffs bivariate_of(const UnivariateForm& uf) {
    const int n = uf.field->degree();
    if (n % 2 != 0) throw std::invalid_argument("bivariate form requires even n");
    const int m = n / 2;
    WeightContext ctx(m);
    BivariateCoeffs bc{uf.field, m,
                       std::vector<uint32_t>(((size_t{1} << m) - 1) * ((size_t{1} << m) + 1), 0),
                       static_cast<int>(uf.coeffs[0])};
    const uint32_t N = uf.field->order();
    for (uint32_t i = 0; i < N; ++i) {
        auto [j, k] = exponent_to_pair(i, ctx);
        uint32_t c = i == 0 ? (uf.coeffs[0] ^ uf.coeffs[N]) : uf.coeffs[i];
        bc.grid[static_cast<size_t>(j) * ((1u << m) + 1) + k] = c;
    }
    return bc;
}

UnivariateForm univariate_of_bivariate(const BivariateCoeffs& bc) {
    const int n = bc.field->degree();
    const uint32_t N = bc.field->order();
    WeightContext ctx(bc.m);
    UnivariateForm uf{bc.field, std::vector<uint32_t>(size_t{1} << n, 0)};
    uf.coeffs[0] = static_cast<uint32_t>(bc.constant);
    for (int j = 0; j <= (1 << bc.m) - 2; ++j)
        for (int k = 0; k <= (1 << bc.m); ++k) {
            const uint64_t i = pair_to_exponent(j, k, ctx);
            const uint32_t c = bc.at(j, k);
            if (i == 0)
                uf.coeffs[N] = static_cast<uint32_t>(bc.constant) ^ c;
            else
                uf.coeffs[i] = c;
        }
    return uf;
}

}  // namespace polarbf

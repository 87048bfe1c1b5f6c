#include "polarbf/spectra.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace polarbf {

WeightContext::WeightContext(int m_) : m(m_), n(2 * m_), modulus((1ull << (2 * m_)) - 1) {
    if (m < 1 || n > 62) throw std::invalid_argument("unsupported half-dimension m");
}

int wt_n(int64_t u, const WeightContext& ctx) {
    int64_t r = u % static_cast<int64_t>(ctx.modulus);
    if (r < 0) r += ctx.modulus;
    return std::popcount(static_cast<uint64_t>(r));
}

uint64_t pair_to_exponent(int j, int k, const WeightContext& ctx) {
    const int64_t pm = 1ll << ctx.m;
    if (j < 0 || j > pm - 2 || k < 0 || k > pm)
        throw std::invalid_argument("pair index out of range");
    const uint64_t raw = static_cast<uint64_t>((pm + 1) * j + (pm - 1) * k) % ctx.modulus;
    return static_cast<uint64_t>((static_cast<unsigned __int128>(raw) << (ctx.m - 1)) % ctx.modulus);
}

std::pair<int, int> exponent_to_pair(uint64_t i, const WeightContext& ctx) {
    if (i >= ctx.modulus) throw std::invalid_argument("exponent out of range");
    const uint64_t pm = 1ull << ctx.m;
    return {static_cast<int>(i % (pm - 1)), static_cast<int>(i % (pm + 1))};
}

SkSet s_k(const WeightContext& ctx, int k) {
    const int64_t pm = 1ll << ctx.m;
    if (k < 0 || k > pm) throw std::invalid_argument("k out of range: " + std::to_string(k));
    SkSet s{k, {}};
    for (int j = 0; j <= pm - 2; ++j)
        if (wt_n((pm + 1) * j + (pm - 1) * k, ctx) < ctx.m) s.members.push_back(j);
    return s;
}

SkSet t_k(const WeightContext& ctx, int k) {
    const int64_t pm = 1ll << ctx.m;
    if (k < 0 || k > pm) throw std::invalid_argument("k out of range: " + std::to_string(k));
    SkSet t{k, {}};
    for (int j = 0; j <= pm - 2; ++j)
        if (wt_n((pm + 1) * j + (pm - 1) * k, ctx) > ctx.m) t.members.push_back(j);
    return t;
}

Lemma1Report verify_lemma1(const WeightContext& ctx) {
    Lemma1Report rep;
    const int64_t pm = 1ll << ctx.m;
    for (int j = 0; j <= pm - 2; ++j) {
        for (int k = 1; k <= pm; ++k) {
            const int lhs = wt_n((pm + 1) * (pm - 1 - j) + (pm - 1) * k, ctx);
            const int rhs = ctx.n - wt_n((pm + 1) * j + (pm - 1) * k, ctx);
            if (lhs != rhs) {
                rep.holds = false;
                if (rep.counterexamples.size() < 100) rep.counterexamples.emplace_back(j, k);
            }
        }
    }
    return rep;
}

Prop3Report verify_prop3(const WeightContext& ctx) {
    Prop3Report rep;
    const int64_t pm = 1ll << ctx.m;
    const int bound = 1 << (ctx.m - 1);
    for (int k = 0; k <= pm; ++k) {
        const int card = static_cast<int>(s_k(ctx, k).members.size());
        rep.cardinalities.push_back(card);
        if (card > rep.max_card) rep.max_card = card;
        if (card > bound) rep.holds = false;
        if (card == bound) {
            rep.equality_cases.push_back(k);
            if (!(ctx.m % 2 == 1 && k == 0)) rep.holds = false;
        }
    }
    // equality must occur when m is odd
    if (ctx.m % 2 == 1 && (rep.equality_cases.empty() || rep.equality_cases[0] != 0))
        rep.holds = false;
    return rep;
}

}  // namespace polarbf

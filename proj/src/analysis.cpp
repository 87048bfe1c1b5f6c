#include "polarbf/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "polarbf/constructions.hpp"
#include "polarbf/gf2mat.hpp"

namespace polarbf {

namespace {

// Monomial masks ordered by (degree, mask value).
std::vector<uint32_t> monomials_up_to(int n, int d) {
    std::vector<uint32_t> ms;
    for (int deg = 0; deg <= d; ++deg)
        for (uint32_t mask = 0; mask < (1u << n); ++mask)
            if (std::popcount(mask) == deg) ms.push_back(mask);
    return ms;
}

}  // namespace

int32_t WalshSpectrum::max_abs() const {
    int32_t m = 0;
    for (int32_t v : values) m = std::max(m, std::abs(v));
    return m;
}

WalshSpectrum walsh_spectrum(const TruthTable& tt) {
    const size_t size = tt.size();
    WalshSpectrum ws{tt.vars(), std::vector<int32_t>(size)};
    for (size_t v = 0; v < size; ++v) ws.values[v] = tt.get(v) ? -1 : 1;
    for (size_t h = 1; h < size; h <<= 1) {
        for (size_t base = 0; base < size; base += 2 * h) {
            for (size_t j = base; j < base + h; ++j) {
                const int32_t a = ws.values[j], b = ws.values[j + h];
                ws.values[j] = a + b;
                ws.values[j + h] = a - b;
            }
        }
    }
    return ws;
}

WalshSpectrum walsh_spectrum_trace(const TruthTable& tt, const FieldPtr& field) {
    if (tt.vars() != field->degree())
        throw std::invalid_argument("table and field dimension mismatch");
    const size_t size = tt.size();
    WalshSpectrum ws{tt.vars(), std::vector<int32_t>(size, 0)};
    for (size_t lam = 0; lam < size; ++lam) {
        const FieldElement l = field->element(static_cast<uint32_t>(lam));
        int32_t acc = 0;
        for (size_t v = 0; v < size; ++v) {
            const int bit =
                tt.get(v) ^ field->trace(field->mul(l, field->element(static_cast<uint32_t>(v))));
            acc += bit ? -1 : 1;
        }
        ws.values[lam] = acc;
    }
    return ws;
}

uint64_t nonlinearity(const TruthTable& tt) {
    return (tt.size() - static_cast<uint64_t>(walsh_spectrum(tt).max_abs())) / 2;
}

AiCertificate algebraic_immunity(const TruthTable& tt, const AiOptions& opts) {
    const int n = tt.vars();
    if (n > opts.max_vars)
        throw ResourceLimitError("algebraic immunity capped at n=" + std::to_string(opts.max_vars));

    // Points of each side; g annihilates a side iff g vanishes on its support.
    std::vector<uint32_t> pts[2];
    for (uint64_t v = 0; v < tt.size(); ++v) pts[tt.get(v) ? 0 : 1].push_back(static_cast<uint32_t>(v));
    if (pts[0].empty() || pts[1].empty()) {
        // constant function: g = 1 annihilates the empty side
        AnfForm g(n);
        g.set(0, 1);
        return {0, pts[0].empty() ? 0 : 1, std::move(g)};
    }

    const int dmax = (n + 1) / 2;
    const auto monos = monomials_up_to(n, dmax);
    IncrementalDependency dep0(pts[0].size(), monos.size());
    IncrementalDependency dep1(pts[1].size(), monos.size());
    IncrementalDependency* deps[2] = {&dep0, &dep1};

    // Monomials are added in (degree, mask) order; the first linear
    // dependence on either side is a minimal-degree annihilator.
    for (size_t t = 0; t < monos.size(); ++t) {
        const uint32_t mono = monos[t];
        for (int side = 0; side < 2; ++side) {
            std::vector<uint64_t> col((pts[side].size() + 63) / 64, 0);
            for (size_t i = 0; i < pts[side].size(); ++i)
                if ((pts[side][i] & mono) == mono) col[i >> 6] |= 1ull << (i & 63);
            auto comb = deps[side]->add(std::move(col));
            if (comb) {
                AnfForm g(n);
                for (size_t u = 0; u <= t; ++u)
                    if ((*comb)[u >> 6] >> (u & 63) & 1) g.set(monos[u], 1);
                return {std::popcount(mono), side, std::move(g)};
            }
        }
    }
    // unreachable: every function has an annihilator of degree <= ceil(n/2)
    throw std::logic_error("no annihilator found up to ceil(n/2)");
}

namespace {

// ANF vectors of f(x) * x^I for each monomial I of degree <= e, as columns.
std::vector<TruthTable> product_anf_columns(const TruthTable& tt,
                                            const std::vector<uint32_t>& monos) {
    std::vector<TruthTable> cols;
    cols.reserve(monos.size());
    for (uint32_t mono : monos) {
        TruthTable prod(tt.vars());
        for (uint64_t v = 0; v < tt.size(); ++v)
            if (tt.get(v) && (v & mono) == mono) prod.set(v, 1);
        cols.push_back(anf_of(prod).raw());
    }
    return cols;
}

Gf2Matrix faa_constraints(const TruthTable& tt, const std::vector<uint32_t>& monos,
                          const std::vector<TruthTable>& cols, int d) {
    // rows: ANF masks J with wt(J) > d, ascending; columns: monomials
    std::vector<uint64_t> masks;
    for (uint64_t j = 0; j < tt.size(); ++j)
        if (std::popcount(j) > d) masks.push_back(j);
    Gf2Matrix a(masks.size(), monos.size());
    for (size_t c = 0; c < cols.size(); ++c)
        for (size_t r = 0; r < masks.size(); ++r)
            if (cols[c].get(masks[r])) a.set(r, c, 1);
    return a;
}

}  // namespace

bool faa_solvable(const TruthTable& tt, int e, int d) {
    const auto monos = monomials_up_to(tt.vars(), e);
    const auto cols = product_anf_columns(tt, monos);
    return !faa_constraints(tt, monos, cols, d).kernel_basis().empty();
}

FaaRow faa_min_degree(const TruthTable& tt, int e, const FaaOptions& opts) {
    const int n = tt.vars();
    if (n > opts.max_vars)
        throw ResourceLimitError("FAA profile capped at n=" + std::to_string(opts.max_vars));
    if (e < 1 || 2 * e >= n) throw std::invalid_argument("need 1 <= e < n/2");

    const auto monos = monomials_up_to(n, e);
    const auto cols = product_anf_columns(tt, monos);
    auto solvable = [&](int d) {
        return !faa_constraints(tt, monos, cols, d).kernel_basis().empty();
    };

    // The observed frontier is d = n-1-e; probe there first, then walk.
    int d = n - 1 - e;
    if (solvable(d)) {
        while (d > e && solvable(d - 1)) --d;
    } else {
        while (!solvable(++d)) {}
    }
    auto kernel = faa_constraints(tt, monos, cols, d).kernel_basis();
    AnfForm g(n);
    for (size_t u = 0; u < monos.size(); ++u)
        if (kernel.front()[u >> 6] >> (u & 63) & 1) g.set(monos[u], 1);
    return {e, d, std::move(g)};
}

std::vector<FaaRow> faa_profile(const TruthTable& tt, const FaaOptions& opts) {
    std::vector<FaaRow> rows;
    for (int e = 1; 2 * e < tt.vars(); ++e) rows.push_back(faa_min_degree(tt, e, opts));
    return rows;
}

int kloosterman(const FieldPtr& field, FieldElement a) {
    if (!field->in_subfield(a)) throw std::invalid_argument("argument outside the subfield");
    int acc = 1;  // x = 0 term: 1/0 := 0, tr(0) = 0
    for (const auto& x : field->subfield()) {
        if (x.is_zero()) continue;
        const auto arg = field->add(field->inv(x), field->mul(a, x));
        acc += field->subfield_trace(arg) ? -1 : 1;
    }
    return acc;
}

Lemma2Report verify_lemma2(const FieldPtr& field) {
    Lemma2Report rep;
    const auto u = field->subgroup_u();
    for (const auto& a : field->subfield()) {
        if (a.is_zero()) continue;
        int lhs = 0;
        for (const auto& z : u) lhs += field->trace(field->mul(a, z)) ? -1 : 1;
        if (lhs != 1 - kloosterman(field, a)) {
            rep.holds = false;
            if (rep.counterexamples.size() < 100) rep.counterexamples.push_back(a.bits);
        }
    }
    return rep;
}

int delta_sum(const FieldPtr& field, int s) {
    const int m = field->half_degree();
    if (s < 0 || s >= (1 << m) - 1) throw std::invalid_argument("shift out of range");
    const int64_t be = (1ll << m) + 1;
    int acc = 0;
    for (int t = 0; t < (1 << (m - 1)); ++t)
        acc += kloosterman(field, field->alpha_power(be * (s + t))) - 1;
    return acc;
}

Lemma3Report verify_lemma3(const FieldPtr& field) {
    const int m = field->half_degree();
    const double ln2_over_pi = std::numbers::ln2 / std::numbers::pi;
    Lemma3Report rep;
    rep.bound_as_printed = (ln2_over_pi + 0.42) * std::ldexp(1.0, m) + 1;
    rep.bound_with_m = (ln2_over_pi * m + 0.42) * std::ldexp(1.0, m) + 1;
    for (int s = 0; s < (1 << m) - 1; ++s)
        rep.max_abs_sum = std::max(rep.max_abs_sum, std::abs(delta_sum(field, s)));
    rep.holds_as_printed = rep.max_abs_sum < rep.bound_as_printed;
    rep.holds_with_m = rep.max_abs_sum < rep.bound_with_m;
    return rep;
}

int phi_sum(const FieldPtr& field, int s, FieldElement c) {
    const int m = field->half_degree();
    if (s < 0 || s > (1 << m)) throw std::invalid_argument("shift out of range");
    if (c.is_zero() || !field->in_subfield(c))
        throw std::invalid_argument("c must be a nonzero subfield element");
    const int64_t xe = (1ll << m) - 1;
    int acc = 0;
    for (int k = 0; k < (1 << (m - 1)); ++k) {
        const auto x = field->alpha_power(xe * (s + k));
        acc += field->trace(field->mul(c, x)) ? -1 : 1;
    }
    return acc;
}

PhiScanReport phi_conjecture_scan(const FieldPtr& field) {
    const int m = field->half_degree();
    PhiScanReport rep;
    for (int s = 0; s <= (1 << m); ++s) {
        for (const auto& c : field->subfield()) {
            if (c.is_zero()) continue;
            const int v = std::abs(phi_sum(field, s, c));
            if (v > rep.max_abs) {
                rep.max_abs = v;
                rep.argmax_s = s;
                rep.argmax_c = c.bits;
            }
        }
    }
    rep.max_ratio = rep.max_abs / std::exp2(m / 2.0);
    return rep;
}

double nl_lower_bound(int m) {
    const double ln2_over_pi = std::numbers::ln2 / std::numbers::pi;
    return std::ldexp(1.0, 2 * m - 1) - (ln2_over_pi * m + 0.92) * std::ldexp(1.0, m) - 1;
}

Theorem4Report verify_theorem4(const FieldPtr& field) {
    Theorem4Report rep;
    rep.nonlinearity = nonlinearity(construction2(field));
    rep.bound = nl_lower_bound(field->half_degree());
    rep.holds = static_cast<double>(rep.nonlinearity) > rep.bound;
    return rep;
}

}  // namespace polarbf

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polarbf/boolfun.hpp"
#include "polarbf/field.hpp"

namespace polarbf {

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WalshSpectrum {
    int n = 0;
    std::vector<int32_t> values;  // indexed like truth-table points

    int32_t max_abs() const;
};

// Dot-product convention on index bits; nonlinearity is convention-free.
WalshSpectrum walsh_spectrum(const TruthTable& tt);
// Trace-form spectrum W_f(lambda) with tr(lambda x); used for spot checks.
WalshSpectrum walsh_spectrum_trace(const TruthTable& tt, const FieldPtr& field);
uint64_t nonlinearity(const TruthTable& tt);

struct AiCertificate {
    int ai = 0;
    int side = 0;       // 0: witness annihilates f; 1: annihilates f+1
    AnfForm witness;    // minimal-degree nonzero annihilator
};

struct AiOptions {
    int max_vars = 14;  // resource cap; computation is O(2^{2n}) bit ops
};

AiCertificate algebraic_immunity(const TruthTable& tt, const AiOptions& opts = {});

struct FaaRow {
    int e = 0;
    int d = 0;          // minimal d admitting nonzero g, deg g <= e, deg(fg) <= d
    AnfForm witness;
};

struct FaaOptions {
    int max_vars = 12;
};

FaaRow faa_min_degree(const TruthTable& tt, int e, const FaaOptions& opts = {});
// Rows for e = 1 .. ceil(n/2)-1.
std::vector<FaaRow> faa_profile(const TruthTable& tt, const FaaOptions& opts = {});
// True iff some nonzero g with deg g <= e has every ANF coefficient of f*g of
// degree > d equal to zero.
bool faa_solvable(const TruthTable& tt, int e, int d);

// Binary complete Kloosterman sum over the subfield F_{2^m}, with 1/0 := 0.
// a must lie in the subfield.
int kloosterman(const FieldPtr& field, FieldElement a);

struct Lemma2Report {
    bool holds = true;
    std::vector<uint32_t> counterexamples;  // subfield elements a (bit patterns)
};

Lemma2Report verify_lemma2(const FieldPtr& field);

// sum over Delta_s = {beta^s, ..., beta^{s+2^{m-1}-1}} of (K(gamma) - 1).
int delta_sum(const FieldPtr& field, int s);

struct Lemma3Report {
    int max_abs_sum = 0;          // max over s of |delta_sum|
    double bound_as_printed = 0;  // (ln2/pi + 0.42) 2^m + 1
    double bound_with_m = 0;      // (ln2/pi * m + 0.42) 2^m + 1
    bool holds_as_printed = true;
    bool holds_with_m = true;
};

Lemma3Report verify_lemma3(const FieldPtr& field);

// Phi_s = sum over {xi^s, ..., xi^{s+2^{m-1}-1}} of (-1)^{tr(c x)}, c in F_{2^m}^*.
int phi_sum(const FieldPtr& field, int s, FieldElement c);

struct PhiScanReport {
    int max_abs = 0;
    double max_ratio = 0;  // max |Phi_s| / 2^{m/2}
    int argmax_s = 0;
    uint32_t argmax_c = 0;
};

PhiScanReport phi_conjecture_scan(const FieldPtr& field);

double nl_lower_bound(int m);

struct Theorem4Report {
    uint64_t nonlinearity = 0;
    double bound = 0;
    bool holds = false;
};

Theorem4Report verify_theorem4(const FieldPtr& field);

}  // namespace polarbf

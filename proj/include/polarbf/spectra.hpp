#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace polarbf {

// Integer combinatorics modulo 2^n-1 for n = 2m: binary weights of reduced
// residues and the CRT pairing between exponents i and pairs (j,k) with
// i = 2^{m-1}((2^m+1)j + (2^m-1)k) mod 2^n-1.
struct WeightContext {
    explicit WeightContext(int m);

    int m;
    int n;
    uint64_t modulus;  // 2^n - 1
};

// Popcount of u reduced mod 2^n-1 into {0..2^n-2}; negative u allowed.
int wt_n(int64_t u, const WeightContext& ctx);

// Forward map requires 0 <= j <= 2^m-2, 0 <= k <= 2^m.
uint64_t pair_to_exponent(int j, int k, const WeightContext& ctx);
std::pair<int, int> exponent_to_pair(uint64_t i, const WeightContext& ctx);

struct SkSet {
    int k = 0;
    std::vector<int> members;  // residues j in Z/(2^m-1)Z, ascending
};

SkSet s_k(const WeightContext& ctx, int k);  // wt_n(...) < m
SkSet t_k(const WeightContext& ctx, int k);  // wt_n(...) > m

struct Lemma1Report {
    bool holds = true;
    // (j, k) pairs violating the identity, first 100 only
    std::vector<std::pair<int, int>> counterexamples;
};

Lemma1Report verify_lemma1(const WeightContext& ctx);

struct Prop3Report {
    bool holds = true;                 // bound and equality characterization
    int max_card = 0;                  // max_k |S_k|
    std::vector<int> equality_cases;   // k with |S_k| = 2^{m-1}
    std::vector<int> cardinalities;    // |S_k| for k = 0..2^m
};

Prop3Report verify_prop3(const WeightContext& ctx);

}  // namespace polarbf

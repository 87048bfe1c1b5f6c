#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "polarbf/boolfun.hpp"
#include "polarbf/field.hpp"

namespace polarbf {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text function file:
//   n=<vars>
//   family=<descriptor>
//   modulus=<binary bits, degree n+1>
//   generator=x^<exponent>
//   tt=<lowercase hex, 2^n/4 digits, most-significant digit = highest points>
struct FunctionFile {
    int n = 0;
    std::string family;
    std::string modulus_bits;
    std::string generator;
    TruthTable tt;

    FieldPtr open_field() const;  // checks the header against the modulus table
};

std::string truth_table_hex(const TruthTable& tt);
TruthTable truth_table_from_hex(int n, const std::string& hex);

FunctionFile make_function_file(const FieldPtr& field, const std::string& family,
                                const TruthTable& tt);
void write_function_file(std::ostream& os, const FunctionFile& ff);
void write_function_file(const std::string& path, const FunctionFile& ff);
FunctionFile read_function_file(std::istream& is);
FunctionFile read_function_file(const std::string& path);

// FNV-1a over the serialized file contents; used as the function identity.
uint64_t content_hash(const FunctionFile& ff);

}  // namespace polarbf

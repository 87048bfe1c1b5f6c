#include "polarbf/fileio.hpp"

#include <fstream>
#include <sstream>

namespace polarbf {

namespace {

std::string modulus_to_bits(uint32_t modulus, int n) {
    std::string s;
    for (int i = n; i >= 0; --i) s += (modulus >> i & 1) ? '1' : '0';
    return s;
}

uint32_t bits_to_modulus(const std::string& bits) {
    uint32_t m = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') throw ParseError("modulus line contains non-binary digit");
        m = m << 1 | static_cast<uint32_t>(c - '0');
    }
    return m;
}

int hex_val(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw ParseError(std::string("invalid hex digit '") + c + "' in truth table payload");
}

}  // namespace

std::string truth_table_hex(const TruthTable& tt) {
    const uint64_t digits = std::max<uint64_t>(tt.size() / 4, 1);
    std::string s(digits, '0');
    for (uint64_t d = 0; d < digits; ++d) {
        int nib = 0;
        for (int b = 3; b >= 0; --b) {
            const uint64_t v = d * 4 + b;
            if (v < tt.size()) nib = nib << 1 | tt.get(v);
        }
        s[digits - 1 - d] = "0123456789abcdef"[nib];
    }
    return s;
}

TruthTable truth_table_from_hex(int n, const std::string& hex) {
    const uint64_t digits = std::max<uint64_t>((1ull << n) / 4, 1);
    if (hex.size() != digits)
        throw ParseError("truth table payload has " + std::to_string(hex.size()) +
                         " hex digits, expected " + std::to_string(digits));
    TruthTable tt(n);
    for (uint64_t d = 0; d < digits; ++d) {
        const int nib = hex_val(hex[digits - 1 - d]);
        for (int b = 0; b < 4; ++b) {
            const uint64_t v = d * 4 + b;
            if (v < tt.size() && (nib >> b & 1)) tt.set(v, 1);
        }
    }
    return tt;
}

FieldPtr FunctionFile::open_field() const {
    FieldPtr field;
    try {
        field = Field::make(n);
    } catch (const std::exception& e) {
        throw ParseError(std::string("unsupported field in header: ") + e.what());
    }
    if (modulus_bits != modulus_to_bits(field->modulus(), n))
        throw ParseError("header modulus does not match the supported field table");
    if (generator != "x^" + std::to_string(field->generator_exponent()))
        throw ParseError("header generator does not match the supported field table");
    return field;
}

FunctionFile make_function_file(const FieldPtr& field, const std::string& family,
                                const TruthTable& tt) {
    return {field->degree(), family, modulus_to_bits(field->modulus(), field->degree()),
            "x^" + std::to_string(field->generator_exponent()), tt};
}

void write_function_file(std::ostream& os, const FunctionFile& ff) {
    os << "n=" << ff.n << "\n"
       << "family=" << ff.family << "\n"
       << "modulus=" << ff.modulus_bits << "\n"
       << "generator=" << ff.generator << "\n"
       << "tt=" << truth_table_hex(ff.tt) << "\n";
}

void write_function_file(const std::string& path, const FunctionFile& ff) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_function_file(os, ff);
}

FunctionFile read_function_file(std::istream& is) {
    FunctionFile ff;
    std::string line;
    int lineno = 0;
    bool have_n = false, have_tt = false;
    std::string tt_hex;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (key == "n") {
            try {
                ff.n = std::stoi(val);
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad n value");
            }
            if (ff.n < 2 || ff.n > 24)
                throw ParseError("line " + std::to_string(lineno) + ": n out of range");
            have_n = true;
        } else if (key == "family") {
            ff.family = val;
        } else if (key == "modulus") {
            ff.modulus_bits = val;
        } else if (key == "generator") {
            ff.generator = val;
        } else if (key == "tt") {
            tt_hex = val;
            have_tt = true;
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!have_n) throw ParseError("missing n= line");
    if (!have_tt) throw ParseError("missing tt= line");
    ff.tt = truth_table_from_hex(ff.n, tt_hex);
    return ff;
}

FunctionFile read_function_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_function_file(is);
}

uint64_t content_hash(const FunctionFile& ff) {
    std::ostringstream os;
    write_function_file(os, ff);
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : os.str()) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

}  // namespace polarbf

#pragma once

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "ssyt/count.hpp"
#include "ssyt/errors.hpp"

namespace ssyt {

/// A contiguously indexed integer sequence a(n0), a(n0+1), ...
struct Sequence {
    long n0 = 1;
    std::vector<Count> terms;

    long last_index() const { return n0 + static_cast<long>(terms.size()) - 1; }

    const Count& at(long n) const { return terms[static_cast<std::size_t>(n - n0)]; }
};

namespace detail {

inline Count parse_count(const std::string& tok, const std::string& context) {
    Count v;
    if (tok.empty() || mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0) {
        throw SequenceFormatError("bad integer '" + tok + "' " + context);
    }
    return v;
}

} // namespace detail

/// Reads either format:
///   - plain: one decimal integer per line, optional `# n0=<k>` header;
///   - b-file: `index value` pairs, indices contiguous (n0 = first index).
/// Other `#` lines and blank lines are ignored. Formats cannot be mixed.
inline Sequence read_sequence(std::istream& is) {
    Sequence seq;
    bool have_mode = false, bfile = false, have_n0 = false;
    long expect_index = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tok1, tok2, extra;
        if (!(ls >> tok1)) continue;
        if (tok1[0] == '#') {
            std::string rest = line.substr(line.find('#') + 1);
            std::istringstream hs(rest);
            std::string kv;
            if (hs >> kv && kv.rfind("n0=", 0) == 0) {
                seq.n0 = std::stol(kv.substr(3));
                have_n0 = true;
            }
            continue;
        }
        bool two = static_cast<bool>(ls >> tok2);
        if (two && (ls >> extra)) {
            throw SequenceFormatError("line " + std::to_string(lineno) + ": too many fields");
        }
        if (!have_mode) {
            have_mode = true;
            bfile = two;
        } else if (bfile != two) {
            throw SequenceFormatError("line " + std::to_string(lineno) +
                                      ": mixed plain and b-file lines");
        }
        std::string ctx = "on line " + std::to_string(lineno);
        if (bfile) {
            if (have_n0) {
                throw SequenceFormatError("n0 header is only valid for plain files");
            }
            long idx;
            try {
                idx = std::stol(tok1);
            } catch (const std::exception&) {
                throw SequenceFormatError("bad index '" + tok1 + "' " + ctx);
            }
            if (seq.terms.empty()) {
                seq.n0 = idx;
            } else if (idx != expect_index) {
                throw SequenceFormatError("non-contiguous index " + std::to_string(idx) + " " +
                                          ctx + ", expected " + std::to_string(expect_index));
            }
            expect_index = idx + 1;
            seq.terms.push_back(detail::parse_count(tok2, ctx));
        } else {
            seq.terms.push_back(detail::parse_count(tok1, ctx));
        }
    }
    if (seq.terms.empty()) throw SequenceFormatError("no terms in sequence input");
    return seq;
}

inline Sequence read_sequence_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw SequenceFormatError("cannot open '" + path + "'");
    return read_sequence(f);
}

} // namespace ssyt

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ssyt/count.hpp"
#include "ssyt/errors.hpp"
#include "ssyt/integer_nullspace.hpp"
#include "ssyt/sequence.hpp"

namespace ssyt {

/// Integer-coefficient polynomial in n, coefficients low degree first.
struct Polynomial {
    std::vector<Count> coeffs;

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    Count eval(long n) const {
        Count r = 0;
        for (std::size_t d = coeffs.size(); d-- > 0;) {
            r = r * n + coeffs[d];
        }
        return r;
    }

    /// Stable text form: c_D*n^D + ... + c_0, every coefficient printed.
    std::string to_text() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t d = coeffs.size(); d-- > 0;) {
            if (!s.empty()) s += " + ";
            s += coeffs[d].get_str();
            if (d >= 1) s += "*n^" + std::to_string(d);
        }
        return s;
    }
};

/// Linear recurrence with polynomial coefficients:
/// sum_{i=0..order} polys[i](n) * a(n+i) = 0 for every n >= valid_from.
/// The coefficient vector is primitive and the leading polynomial has a
/// positive leading coefficient.
struct Recurrence {
    int order = 0;
    int degree = 0;
    std::vector<Polynomial> polys;
    long valid_from = 1;
};

/// Exact check of the recurrence at every index the sequence covers.
inline bool satisfies(const Recurrence& rec, const Sequence& seq) {
    long last_n = seq.last_index() - rec.order;
    for (long n = seq.n0; n <= last_n; ++n) {
        Count sum = 0;
        for (int i = 0; i <= rec.order; ++i) {
            sum += rec.polys[static_cast<std::size_t>(i)].eval(n) * seq.at(n + i);
        }
        if (sum != 0) return false;
    }
    return true;
}

struct FitResult {
    Recurrence rec;
    int nullspace_dim = 0;
};

struct GuessReport {
    bool found = false;
    FitResult fit;        // set when found
    int found_budget = 0; // (order+1)(degree+1) of the winning ansatz

    int max_budget_tested = 0; // largest budget with every (L,D) pair tested
    long terms_used = 0;
    int guard = 0;
    long pairs_tested = 0;
    std::vector<std::pair<int, int>> untested; // (L,D) skipped by the guard
};

inline constexpr int kDefaultGuard = 10;

namespace detail {

// normalized primitive vector with positive leading coefficient of the last
// nonzero polynomial; layout c[(i,d)] = v[i*(D+1)+d]
inline void normalize_coeff_vector(std::vector<Count>& v, int L, int D) {
    Count content = 0;
    for (const Count& c : v) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content > 1) {
        for (Count& c : v) c = exact_div(c, content);
    }
    for (int i = L; i >= 0; --i) {
        for (int d = D; d >= 0; --d) {
            const Count& c = v[static_cast<std::size_t>(i * (D + 1) + d)];
            if (c != 0) {
                if (c < 0) {
                    for (Count& e : v) e = -e;
                }
                return;
            }
        }
    }
}

inline bool lex_less(const std::vector<Count>& a, const std::vector<Count>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int cmp = mpz_cmp(a[i].get_mpz_t(), b[i].get_mpz_t());
        if (cmp != 0) return cmp < 0;
    }
    return false;
}

inline Recurrence vector_to_recurrence(const std::vector<Count>& v, int L, int D, long n0) {
    Recurrence rec;
    rec.polys.resize(static_cast<std::size_t>(L) + 1);
    for (int i = 0; i <= L; ++i) {
        auto& poly = rec.polys[static_cast<std::size_t>(i)];
        poly.coeffs.assign(v.begin() + i * (D + 1), v.begin() + (i + 1) * (D + 1));
        poly.trim();
    }
    while (rec.polys.size() > 1 && rec.polys.back().is_zero()) rec.polys.pop_back();
    rec.order = static_cast<int>(rec.polys.size()) - 1;
    rec.degree = 0;
    for (const auto& p : rec.polys) rec.degree = std::max(rec.degree, std::max(p.degree(), 0));
    rec.valid_from = n0;
    return rec;
}

} // namespace detail

/// Fits the ansatz sum_i p_i(n) a(n+i) = 0 with order L and degree bound D,
/// using every available equation (one per index n). Requires at least
/// `guard` more equations than unknowns. Returns the lexicographically
/// smallest normalized nullspace vector together with the nullspace
/// dimension, or nothing when the system has full column rank.
///
/// Full rank is usually certified by row reduction modulo a fixed 61-bit
/// prime (rank can only drop under reduction, so full modular column rank is
/// an exact proof); the fraction-free integer elimination runs whenever the
/// certificate does not apply. Any returned recurrence is re-verified
/// against every term with exact arithmetic.
inline std::optional<FitResult> fit_recurrence(const Sequence& seq, int L, int D, int guard) {
    if (L < 1 || D < 0 || guard < 0) throw std::invalid_argument("fit_recurrence: bad ansatz");
    long len = static_cast<long>(seq.terms.size());
    long E = len - L;
    long B = static_cast<long>(L + 1) * (D + 1);
    if (E < B + guard) {
        throw InsufficientTerms("order " + std::to_string(L) + " degree " + std::to_string(D) +
                                " needs " + std::to_string(B + guard + L) + " terms, have " +
                                std::to_string(len));
    }

    const std::uint64_t p = detail::kRankPrime;
    std::vector<std::uint64_t> terms_mod(seq.terms.size());
    for (std::size_t t = 0; t < seq.terms.size(); ++t) {
        terms_mod[t] = mpz_fdiv_ui(seq.terms[t].get_mpz_t(), p);
    }
    std::vector<std::vector<std::uint64_t>> mod_matrix(static_cast<std::size_t>(E));
    for (long e = 0; e < E; ++e) {
        long n = seq.n0 + e;
        std::uint64_t nmod = static_cast<std::uint64_t>(((n % static_cast<long>(p)) +
                                                         static_cast<long>(p)) %
                                                        static_cast<long>(p));
        auto& row = mod_matrix[static_cast<std::size_t>(e)];
        row.resize(static_cast<std::size_t>(B));
        std::uint64_t npow = 1;
        for (int d = 0; d <= D; ++d) {
            for (int i = 0; i <= L; ++i) {
                row[static_cast<std::size_t>(i * (D + 1) + d)] =
                    detail::mulmod(terms_mod[static_cast<std::size_t>(e + i)], npow, p);
            }
            npow = detail::mulmod(npow, nmod, p);
        }
    }
    if (rank_mod_p(std::move(mod_matrix), p) == B) return std::nullopt;

    MpzMatrix matrix(static_cast<std::size_t>(E));
    for (long e = 0; e < E; ++e) {
        long n = seq.n0 + e;
        auto& row = matrix[static_cast<std::size_t>(e)];
        row.resize(static_cast<std::size_t>(B));
        Count npow = 1;
        for (int d = 0; d <= D; ++d) {
            for (int i = 0; i <= L; ++i) {
                row[static_cast<std::size_t>(i * (D + 1) + d)] =
                    seq.terms[static_cast<std::size_t>(e + i)] * npow;
            }
            npow *= n;
        }
    }
    std::vector<std::vector<Count>> basis = integer_nullspace(matrix);
    if (basis.empty()) return std::nullopt;

    const std::vector<Count>* best = nullptr;
    for (auto& v : basis) {
        detail::normalize_coeff_vector(v, L, D);
        // a vector supported on p_0 alone forces a(n) = 0 and is not a recurrence
        bool degenerate = true;
        for (std::size_t c = static_cast<std::size_t>(D) + 1; c < v.size(); ++c) {
            if (v[c] != 0) degenerate = false;
        }
        if (degenerate) continue;
        if (!best || detail::lex_less(v, *best)) best = &v;
    }
    if (!best) return std::nullopt;

    FitResult result;
    result.rec = detail::vector_to_recurrence(*best, L, D, seq.n0);
    result.nullspace_dim = static_cast<int>(basis.size());
    if (!satisfies(result.rec, seq)) {
        throw std::logic_error("fit_recurrence: nullspace vector failed exact re-verification");
    }
    return result;
}

/// Budget sweep: budgets B = 2..max_budget, and within one budget all
/// (L, D) with (L+1)(D+1) = B by increasing order. Returns the first fit.
/// Pairs whose guard precondition fails are reported untested, and
/// max_budget_tested stops just below the first of them.
inline GuessReport search_recurrence(const Sequence& seq, int max_budget,
                                     int guard = kDefaultGuard) {
    if (max_budget < 2) throw std::invalid_argument("search_recurrence: max_budget must be >= 2");
    GuessReport report;
    report.terms_used = static_cast<long>(seq.terms.size());
    report.guard = guard;
    int covered = 1; // budgets fully tested so far
    bool coverage_intact = true;
    long len = static_cast<long>(seq.terms.size());

    for (int B = 2; B <= max_budget; ++B) {
        bool all_tested = true;
        for (int lp1 = 2; lp1 <= B; ++lp1) {
            if (B % lp1 != 0) continue;
            int L = lp1 - 1;
            int D = B / lp1 - 1;
            if (len - L < static_cast<long>(B) + guard) {
                report.untested.emplace_back(L, D);
                all_tested = false;
                continue;
            }
            ++report.pairs_tested;
            if (auto fit = fit_recurrence(seq, L, D, guard)) {
                report.found = true;
                report.fit = std::move(*fit);
                report.found_budget = B;
                report.max_budget_tested = covered;
                return report;
            }
        }
        if (coverage_intact && all_tested) {
            covered = B;
        } else {
            coverage_intact = false;
        }
    }
    report.max_budget_tested = covered;
    return report;
}

/// Extends the sequence by solving for a(n + order); every step divides by
/// the leading polynomial and must be exact.
inline Sequence apply_recurrence(const Recurrence& rec, const Sequence& seq, int extend_by) {
    if (static_cast<long>(seq.terms.size()) < rec.order) {
        throw InsufficientTerms("need at least " + std::to_string(rec.order) +
                                " terms to extend");
    }
    Sequence out = seq;
    for (int step = 0; step < extend_by; ++step) {
        long next_index = out.last_index() + 1;
        long n = next_index - rec.order;
        Count lead = rec.polys[static_cast<std::size_t>(rec.order)].eval(n);
        if (lead == 0) throw LeadingPolyZero(n);
        Count sum = 0;
        for (int i = 0; i < rec.order; ++i) {
            sum += rec.polys[static_cast<std::size_t>(i)].eval(n) * out.at(n + i);
        }
        sum = -sum;
        if (mpz_divisible_p(sum.get_mpz_t(), lead.get_mpz_t()) == 0) {
            throw NonIntegerExtension(n);
        }
        Count q;
        mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), lead.get_mpz_t());
        out.terms.push_back(std::move(q));
    }
    return out;
}

} // namespace ssyt

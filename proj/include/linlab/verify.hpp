#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "linlab/analysis.hpp"
#include "linlab/boolfun.hpp"
#include "linlab/f2.hpp"
#include "linlab/rational.hpp"
#include "linlab/tree.hpp"

namespace linlab {

// Structured evidence from a brute-force check. A passing report has no
// witnesses; notes carry non-fatal observations.
struct VerifierReport {
    std::string lemma_id;
    std::string parameters;
    std::uint64_t instances_checked = 0;
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;

    std::uint64_t violations() const { return witnesses.size(); }
    bool passed() const { return witnesses.empty(); }
};

struct QuadsumCoefficients {
    F2Vector singles;  // b_i, one per x_i
    F2Vector pairs;    // a_ij over i < j, pair order
};

// Coefficients with f(x_1+...+x_k) = sum a_ij f(x_i+x_j) + sum b_i f(x_i)
// for every quadratic f. Solvable for every input set.
QuadsumCoefficients quadsum_coefficients(const std::vector<F2Vector>& xs);

// Extracts coefficients and re-verifies the identity: over all quadratics
// when n <= 4, over `samples` random ones otherwise.
VerifierReport verify_quadsum(const std::vector<F2Vector>& xs, std::uint64_t samples,
                              std::uint64_t seed);
VerifierReport verify_quadsum_suite(std::uint64_t instances, std::uint64_t seed,
                                    std::size_t max_k = 6);

struct RankInequality {
    std::size_t lin_rank;
    std::size_t quad_rank;
    bool holds;  // quad_rank <= C(lin_rank,2) + lin_rank
};

RankInequality verify_rank_inequality(const std::vector<F2Vector>& xs);
VerifierReport verify_rank_inequality_suite(std::uint64_t instances, std::size_t max_n,
                                            std::size_t max_set, std::uint64_t seed);

// Exact acceptance of a random quadratic against the proven floor
// lin_accept - 1 + 2^{-psi(q_avg)}, where q_avg is the exact average query
// depth over random linear functions. p0 and p1 are the two halves of the
// proof's decomposition, emitted as diagnostics only.
struct MainLemmaReport {
    Rational quad_accept;
    Rational lin_accept;
    Rational avg_queries;
    Rational p0;  // sum over reachable-by-linear leaves of 2^{-q(v)}
    Rational p1;  // same restricted to reject leaves
    double floor_value;
    bool in_hypothesis;  // avg_queries >= 1
    bool holds;          // asserted only when in_hypothesis
};

MainLemmaReport verify_main_lemma(const RandomizedTest& test);
VerifierReport verify_main_lemma_suite(std::uint64_t random_trees, std::uint64_t seed);

// Rank statistics of B = A + A^t over random quadratics. The largest
// agreement with any linear function is 2^{-rank(B)/2}; at n <= 4 every
// sample is cross-checked against the full spectrum.
struct FarnessReport {
    std::size_t n = 0;
    std::uint64_t samples = 0;
    std::map<std::size_t, std::uint64_t> rank_histogram;  // rank(B) -> count
    std::uint64_t cross_check_violations = 0;

    std::map<Rational, std::uint64_t> agreement_histogram() const;
    Rational fraction_below(std::size_t rank_threshold) const;
};

FarnessReport farness_report(std::size_t n, std::uint64_t samples, std::uint64_t seed);

// Exhaustive count of n x n matrices of rank at most k, against two
// bounds: the coarse n^k 2^{nk} (too small in places, e.g. n=3, k=1) and
// C(n,k) 2^{nk} 2^{k(n-k)}, which always holds.
struct LowRankCount {
    std::size_t n;
    std::size_t k;
    std::uint64_t exact_count;
    std::uint64_t stated_bound;     // n^k 2^{nk}
    std::uint64_t corrected_bound;  // C(n,k) 2^{nk} 2^{k(n-k)}
    bool stated_bound_holds;
    bool corrected_bound_holds;
};

LowRankCount count_low_rank(std::size_t n, std::size_t k);  // n <= 4
VerifierReport verify_low_rank_counts(std::size_t max_n = 4);

}  // namespace linlab

#include "linlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "linlab/bounds.hpp"

namespace linlab {

namespace {

constexpr double kFloorSlack = 1e-12;

std::string describe_set(const std::vector<F2Vector>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += xs[i].to_bitstring();
    }
    return s + "}";
}

}  // namespace

QuadsumCoefficients quadsum_coefficients(const std::vector<F2Vector>& xs) {
    if (xs.empty()) throw std::invalid_argument("quadsum_coefficients: need k >= 1");
    std::size_t k = xs.size();
    F2Vector target = xs.front();
    for (std::size_t i = 1; i < k; ++i) target ^= xs[i];

    std::vector<F2Vector> basis;
    basis.reserve(moment_dim(k));
    for (const F2Vector& x : xs) basis.push_back(moment_vector(x));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) basis.push_back(moment_vector(xs[i] ^ xs[j]));

    std::optional<F2Vector> coeffs = express_in_span(basis, moment_vector(target));
    if (!coeffs) throw std::logic_error("quadsum_coefficients: sum left the span");

    QuadsumCoefficients out{F2Vector(k), F2Vector(pair_count(k))};
    for (std::size_t i = 0; i < k; ++i) out.singles.set(i, coeffs->get(i));
    for (std::size_t p = 0; p < pair_count(k); ++p) out.pairs.set(p, coeffs->get(k + p));
    return out;
}

namespace {

// One side-by-side evaluation of the identity on a concrete quadratic.
bool quadsum_holds(const QuadraticFn& f, const std::vector<F2Vector>& xs,
                   const QuadsumCoefficients& c) {
    std::size_t k = xs.size();
    F2Vector target = xs.front();
    for (std::size_t i = 1; i < k; ++i) target ^= xs[i];
    int rhs = 0;
    for (std::size_t i = 0; i < k; ++i)
        if (c.singles.get(i)) rhs ^= f(xs[i]);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (c.pairs.get(pair_index(k, i, j))) rhs ^= f(xs[i] ^ xs[j]);
    return f(target) == rhs;
}

}  // namespace

VerifierReport verify_quadsum(const std::vector<F2Vector>& xs, std::uint64_t samples,
                              std::uint64_t seed) {
    VerifierReport report;
    report.lemma_id = "quadsum";
    std::size_t n = xs.empty() ? 0 : xs.front().size();
    std::ostringstream params;
    params << "k=" << xs.size() << " n=" << n << " samples=" << samples << " seed=" << seed;
    report.parameters = params.str();

    QuadsumCoefficients coeffs;
    try {
        coeffs = quadsum_coefficients(xs);
    } catch (const std::logic_error&) {
        report.witnesses.push_back("no coefficients for " + describe_set(xs));
        return report;
    }

    auto check = [&](const QuadraticFn& f) {
        ++report.instances_checked;
        if (!quadsum_holds(f, xs, coeffs))
            report.witnesses.push_back("identity fails on " + to_literal(f) + " for " +
                                       describe_set(xs));
    };

    if (n <= 4) {
        std::uint64_t count = std::uint64_t(1) << moment_dim(n);
        for (std::uint64_t c = 0; c < count; ++c)
            check(QuadraticFn::from_coeffs(n, F2Vector::from_index(moment_dim(n), c)));
    } else {
        Rng rng(seed);
        for (std::uint64_t s = 0; s < samples; ++s) check(sample_quadratic(n, rng));
    }
    return report;
}

VerifierReport verify_quadsum_suite(std::uint64_t instances, std::uint64_t seed,
                                    std::size_t max_k) {
    if (max_k == 0) throw std::invalid_argument("verify_quadsum_suite: need max_k >= 1");
    VerifierReport report;
    report.lemma_id = "quadsum";
    report.parameters = "instances=" + std::to_string(instances) + " max_k=" +
                        std::to_string(max_k) + " seed=" + std::to_string(seed);
    Rng rng(seed);
    for (std::uint64_t i = 0; i < instances; ++i) {
        std::size_t k = 1 + draw_below(rng, max_k);
        std::size_t n = 1 + draw_below(rng, 8);
        std::vector<F2Vector> xs;
        xs.reserve(k);
        for (std::size_t j = 0; j < k; ++j) xs.push_back(random_vector(rng, n));
        VerifierReport one = verify_quadsum(xs, 1000, draw_bits(rng, 63));
        ++report.instances_checked;
        for (std::string& w : one.witnesses) report.witnesses.push_back(std::move(w));
    }
    return report;
}

RankInequality verify_rank_inequality(const std::vector<F2Vector>& xs) {
    std::size_t l = rank(xs);
    std::size_t q = quadratic_rank(xs);
    return RankInequality{l, q, q <= l * (l + 1) / 2};
}

VerifierReport verify_rank_inequality_suite(std::uint64_t instances, std::size_t max_n,
                                            std::size_t max_set, std::uint64_t seed) {
    VerifierReport report;
    report.lemma_id = "rank-ineq";
    std::ostringstream params;
    params << "instances=" << instances << " max_n=" << max_n << " max_set=" << max_set
           << " seed=" << seed;
    report.parameters = params.str();
    Rng rng(seed);
    for (std::uint64_t i = 0; i < instances; ++i) {
        std::size_t n = 1 + draw_below(rng, max_n);
        std::size_t size = 1 + draw_below(rng, max_set);
        std::vector<F2Vector> xs;
        xs.reserve(size);
        for (std::size_t j = 0; j < size; ++j) xs.push_back(random_vector(rng, n));
        RankInequality r = verify_rank_inequality(xs);
        ++report.instances_checked;
        if (!r.holds) {
            std::ostringstream w;
            w << "q=" << r.quad_rank << " > C(l,2)+l with l=" << r.lin_rank << " for "
              << describe_set(xs);
            report.witnesses.push_back(w.str());
        }
    }
    return report;
}

MainLemmaReport verify_main_lemma(const RandomizedTest& test) {
    MainLemmaReport r{};
    for (const RandomizedTest::Weighted& w : test.instances()) {
        TreeAnalysis a = analyze_tree(w.tree);
        r.lin_accept += w.weight * a.lin_accept;
        r.quad_accept += w.weight * a.quad_accept;
        r.avg_queries += w.weight * a.avg_depth_lin;
        for (const LeafRecord& leaf : a.leaves) {
            if (!leaf.in_l) continue;
            r.p0 += w.weight * leaf.p_quad;
            if (!leaf.verdict) r.p1 += w.weight * leaf.p_quad;
        }
    }
    r.in_hypothesis = r.avg_queries >= Rational(1);
    r.floor_value =
        r.lin_accept.to_double() - 1.0 + std::exp2(-psi(r.avg_queries.to_double()));
    r.holds = !r.in_hypothesis || r.quad_accept.to_double() >= r.floor_value - kFloorSlack;
    return r;
}

namespace {

void check_main_lemma(const RandomizedTest& test, const std::string& name,
                      VerifierReport& report, std::uint64_t& skipped) {
    MainLemmaReport r = verify_main_lemma(test);
    if (!r.in_hypothesis) {
        ++skipped;
        return;
    }
    ++report.instances_checked;
    if (!r.holds) {
        std::ostringstream w;
        w << name << ": quad_accept=" << r.quad_accept << " < floor=" << r.floor_value
          << " (lin_accept=" << r.lin_accept << ", q_avg=" << r.avg_queries << ")";
        report.witnesses.push_back(w.str());
    }
}

}  // namespace

VerifierReport verify_main_lemma_suite(std::uint64_t random_trees, std::uint64_t seed) {
    VerifierReport report;
    report.lemma_id = "main-lemma";
    report.parameters =
        "random_trees=" + std::to_string(random_trees) + " seed=" + std::to_string(seed);
    Rng rng(seed);
    std::uint64_t skipped = 0;

    // Canonical instances.
    for (std::size_t n = 2; n <= 4; ++n)
        for (int rep = 0; rep < 5; ++rep)
            check_main_lemma(RandomizedTest::single(sample_blr_instance(n, rng)),
                             "blr n=" + std::to_string(n), report, skipped);
    check_main_lemma(
        RandomizedTest::single(blr_instance(F2Vector(2), F2Vector(2))),
        "blr degenerate", report, skipped);
    check_main_lemma(RandomizedTest::single(complete_graph_instance(
                         {F2Vector::unit(3, 0), F2Vector::unit(3, 1), F2Vector::unit(3, 2)})),
                     "kgraph k=3 (e1,e2,e3)", report, skipped);
    for (int rep = 0; rep < 3; ++rep)
        check_main_lemma(RandomizedTest::single(sample_kgraph_instance(2, 3, rng)),
                         "kgraph k=2 n=3", report, skipped);
    for (int rep = 0; rep < 3; ++rep)
        check_main_lemma(RandomizedTest::single(sample_kgraph_instance(3, 4, rng)),
                         "kgraph k=3 n=4", report, skipped);

    // Random single trees.
    for (std::uint64_t t = 0; t < random_trees; ++t) {
        std::size_t n = 2 + draw_below(rng, 3);
        TestTree tree = sample_random_tree(n, 5, rng);
        check_main_lemma(RandomizedTest::single(std::move(tree)),
                         "random tree #" + std::to_string(t), report, skipped);
    }

    // Random mixtures with non-dyadic weights.
    std::uint64_t mixtures = std::max<std::uint64_t>(1, random_trees / 50);
    for (std::uint64_t m = 0; m < mixtures; ++m) {
        std::size_t n = 2 + draw_below(rng, 3);
        std::size_t parts = 2 + draw_below(rng, 3);
        std::vector<std::int64_t> raw(parts);
        std::int64_t total = 0;
        for (auto& v : raw) {
            v = 1 + static_cast<std::int64_t>(draw_below(rng, 9));
            total += v;
        }
        std::vector<RandomizedTest::Weighted> weighted;
        for (std::size_t p = 0; p < parts; ++p)
            weighted.push_back({Rational(raw[p], total), sample_random_tree(n, 4, rng)});
        check_main_lemma(RandomizedTest::mixture(std::move(weighted)),
                         "mixture #" + std::to_string(m), report, skipped);
    }

    if (skipped)
        report.notes.push_back(std::to_string(skipped) +
                               " instance(s) outside the q >= 1 hypothesis, skipped");
    return report;
}

std::map<Rational, std::uint64_t> FarnessReport::agreement_histogram() const {
    std::map<Rational, std::uint64_t> out;
    for (const auto& [r, count] : rank_histogram)
        out[Rational::pow2(-static_cast<int>(r / 2))] += count;
    return out;
}

Rational FarnessReport::fraction_below(std::size_t rank_threshold) const {
    std::uint64_t below = 0;
    for (const auto& [r, count] : rank_histogram)
        if (r < rank_threshold) below += count;
    return Rational(static_cast<std::int64_t>(below), static_cast<std::int64_t>(samples));
}

FarnessReport farness_report(std::size_t n, std::uint64_t samples, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("farness_report: need n >= 1");
    FarnessReport report;
    report.n = n;
    report.samples = samples;
    Rng rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
        QuadraticFn f = sample_quadratic(n, rng);
        FourierProfile profile = fourier_profile(f);
        ++report.rank_histogram[profile.rank_b];
        if (n <= 4 && distance_to_linear(to_truth_table(f)) != profile.magnitude)
            ++report.cross_check_violations;
    }
    return report;
}

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp--) r *= base;
    return r;
}

}  // namespace

LowRankCount count_low_rank(std::size_t n, std::size_t k) {
    if (n == 0 || n > 4)
        throw std::invalid_argument("count_low_rank: enumeration supports 1 <= n <= 4");
    if (k > n) throw std::invalid_argument("count_low_rank: need k <= n");

    std::uint64_t exact = 0;
    std::uint64_t total = std::uint64_t(1) << (n * n);
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<F2Vector> rows;
        rows.reserve(n);
        for (std::size_t r = 0; r < n; ++r)
            rows.push_back(
                F2Vector::from_index(n, (bits >> (r * n)) & ((std::uint64_t(1) << n) - 1)));
        if (rank(rows) <= k) ++exact;
    }

    LowRankCount out;
    out.n = n;
    out.k = k;
    out.exact_count = exact;
    out.stated_bound = pow_u64(n, k) * pow_u64(2, n * k);
    out.corrected_bound = binomial(n, k) * pow_u64(2, n * k) * pow_u64(2, k * (n - k));
    out.stated_bound_holds = exact <= out.stated_bound;
    out.corrected_bound_holds = exact <= out.corrected_bound;
    return out;
}

VerifierReport verify_low_rank_counts(std::size_t max_n) {
    VerifierReport report;
    report.lemma_id = "low-rank-count";
    report.parameters = "max_n=" + std::to_string(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            LowRankCount c = count_low_rank(n, k);
            ++report.instances_checked;
            std::ostringstream cell;
            cell << "n=" << n << " k=" << k << ": exact=" << c.exact_count
                 << " stated=" << c.stated_bound << " corrected=" << c.corrected_bound;
            if (!c.corrected_bound_holds)
                report.witnesses.push_back("corrected bound fails at " + cell.str());
            if (!c.stated_bound_holds)
                report.notes.push_back("stated bound n^k 2^{nk} exceeded at " + cell.str());
        }
    }
    return report;
}

}  // namespace linlab

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "zss/verify.hpp"

using namespace zss;

namespace {

long long count_of(const VerificationOutcome& o, const std::string& key) {
    for (const auto& [k, v] : o.counts)
        if (k == key) return v;
    FAIL("missing count: " << key);
    return -1;
}

// Literal term-by-term sums, kept independent of the closed forms in
// claim7_terms.
ClaimTerms loop_terms(int n, int t) {
    const long long big_t = 3LL * t / 2;
    const long long r = n - big_t;
    ClaimTerms terms;
    terms.a0 = static_cast<long long>(t) * (t - 1) / 2 + (t / 2) * (t / 2) + 2LL * t * (t / 2);
    for (long long k = 1; k <= r; ++k) {
        terms.a1 += 2 * ((t + 1 - k) / 2);
        terms.a2 += 2 * (t - k);
    }
    terms.a3 = r > 0 ? r : 0;
    return terms;
}

}  // namespace

TEST_CASE("claim7_terms closed forms match literal summation") {
    for (int n = 12; n <= 30; ++n) {
        for (int t = n / 2; t <= (2 * n + 1) / 3; ++t) {
            const ClaimTerms fast = claim7_terms({n, t});
            const ClaimTerms slow = loop_terms(n, t);
            REQUIRE(fast.a0 == slow.a0);
            REQUIRE(fast.a1 == slow.a1);
            REQUIRE(fast.a2 == slow.a2);
            REQUIRE(fast.a3 == slow.a3);
        }
    }

    const ClaimTerms t12 = claim7_terms({12, 6});
    REQUIRE(t12.total() == loop_terms(12, 6).total());
    REQUIRE(t12.total() > (12 * 12 + 2 * 12) / 2);  // 84

    // T >= n leaves no residue rows: only a0 contributes
    const ClaimTerms flat = claim7_terms({12, 8});
    REQUIRE(flat.a1 == 0);
    REQUIRE(flat.a2 == 0);
    REQUIRE(flat.a3 == 0);
    REQUIRE(flat.total() == flat.a0);

    const ClaimTerms t15 = claim7_terms({15, 7});
    REQUIRE(t15.total() == loop_terms(15, 7).total());
    REQUIRE(2 * t15.total() > 15 * 15 + 2 * 15);

    REQUIRE_THROWS_AS(claim7_terms({12, 5}), std::invalid_argument);
    REQUIRE_THROWS_AS(claim7_terms({12, 9}), std::invalid_argument);
}

TEST_CASE("claim8 inequality holds over its whole grid") {
    const VerificationOutcome o = verify_claim8();
    REQUIRE(o.status == CheckStatus::pass);
    REQUIRE(count_of(o, "cases") == 14);  // t-interval sizes 3+4+3+4 for n=12..15
}

TEST_CASE("parabola bound sweep") {
    const VerificationOutcome o = verify_parabola_bound(100000);
    REQUIRE(o.status == CheckStatus::pass);
    REQUIRE(count_of(o, "n checked") == 100000 - 15);
    REQUIRE_THROWS_AS(verify_parabola_bound(15), std::invalid_argument);

    // spot values: 4691 > 4608 at n=16, and the bound fails at n=15 and n=0
    const auto lhs = [](long long n) { return 23 * n * n - 70 * n - 77; };
    const auto rhs = [](long long n) { return 16 * (n * n + 2 * n); };
    REQUIRE(lhs(16) == 4691);
    REQUIRE(rhs(16) == 4608);
    REQUIRE(lhs(15) <= rhs(15));
    REQUIRE(lhs(0) <= rhs(0));
}

TEST_CASE("observation1 formula sweep") {
    const VerificationOutcome o = verify_observation1();
    REQUIRE(o.status == CheckStatus::pass);
    long long expected_cases = 0;
    for (int n = 1; n <= 12; ++n)
        for (int m = n; m <= 12; ++m) expected_cases += n + m;
    REQUIRE(count_of(o, "cases") == expected_cases);
}

TEST_CASE("lemma3 shape sweep within a small budget") {
    VerifyOptions opts;
    opts.max_n = 6;
    const VerificationOutcome o = verify_lemma3(opts);
    REQUIRE(o.status == CheckStatus::pass);
    REQUIRE(count_of(o, "4x5 exceptional") == 28);
    REQUIRE(count_of(o, "5x5 exceptional") == 32);
    REQUIRE(count_of(o, "5x6 exceptional") == 0);
    REQUIRE(count_of(o, "6x6 exceptional") == 0);
    REQUIRE(count_of(o, "6x7 exceptional") == 0);
    REQUIRE(count_of(o, "skipped shapes") == 10);  // 7x7 .. 11x12
    REQUIRE(o.note.find("skipped: 7x7") != std::string::npos);
    REQUIRE(o.note.find("11x12") != std::string::npos);
}

TEST_CASE("theorem5 at n = 5 and 6") {
    const VerificationOutcome o5 = verify_theorem5(5);
    REQUIRE(o5.status == CheckStatus::pass);
    REQUIRE(count_of(o5, "5x5 non-split") == 0);
    REQUIRE(count_of(o5, "5x6 non-split") == 0);
    REQUIRE(count_of(o5, "5x5 zssf with |disc|<=n-1") == 0);
    REQUIRE(count_of(o5, "5x5 zssf") == 8);  // the split survivors, |disc| = 5

    REQUIRE(verify_theorem5(6).status == CheckStatus::pass);
    REQUIRE_THROWS_AS(verify_theorem5(4), std::invalid_argument);
}

TEST_CASE("theorem5 range respects the budget") {
    VerifyOptions opts;
    opts.max_n = 5;
    const auto outs = verify_theorem5_range(opts);
    REQUIRE(outs.size() == 7);  // n = 5..11
    REQUIRE(outs[0].status == CheckStatus::pass);
    for (size_t i = 1; i < outs.size(); ++i) REQUIRE(outs[i].status == CheckStatus::skipped);
}

TEST_CASE("block t-split detection") {
    const BinaryMatrix s = make_t_split(6, 6, 3);
    REQUIRE(block_is_t_split(s, 1, 4, 1, 4, 3));
    REQUIRE(block_is_t_split(s, 1, 6, 1, 6, 3));
    REQUIRE_FALSE(block_is_t_split(s, 1, 4, 1, 4, 2));
    // blocks offset from the corner see a shifted boundary
    REQUIRE(block_is_t_split(s, 2, 4, 1, 3, 2));
    REQUIRE(block_is_t_split(s, 2, 4, 2, 4, 1));
}

TEST_CASE("lemma4 property suite on the default samples") {
    const auto samples = lemma4_default_samples();
    const VerificationOutcome o = property_check_lemma4(samples);
    REQUIRE(o.status == CheckStatus::pass);
    REQUIRE(count_of(o, "hypothesis hits") > 0);
    REQUIRE(count_of(o, "eligible") > 0);
    REQUIRE(o.witnesses.empty());
}

TEST_CASE("lemma4 skips out-of-contract samples") {
    // contains a zero-sum square; and a 4x4 is below the row threshold
    const std::vector<BinaryMatrix> samples = {
        BinaryMatrix::from_rows({"+-+++", "-++++", "+++++", "+++++", "+++++"}),
        BinaryMatrix(4, 4, 1),
    };
    const VerificationOutcome o = property_check_lemma4(samples);
    REQUIRE(count_of(o, "skipped") == 2);
    REQUIRE(count_of(o, "eligible") == 0);
}

TEST_CASE("lemma5 property suite on the default samples") {
    const auto samples = lemma5_default_samples();
    const VerificationOutcome o = property_check_lemma5(samples);
    REQUIRE(o.status == CheckStatus::pass);
    REQUIRE(count_of(o, "prefix hits") > 0);
    REQUIRE(count_of(o, "clause checks") > 0);
    REQUIRE(count_of(o, "no qualifying prefix") > 0);
    REQUIRE(o.witnesses.empty());
}

TEST_CASE("even-index grid witness keeps half-squared discrepancy") {
    for (int n = 2; n <= 10; n += 2) {
        const BinaryMatrix grid = BinaryMatrix::build(
            n, n, [](int i, int j) { return (i % 2 == 0 && j % 2 == 0) ? -1 : 1; });
        REQUIRE(is_zero_sum_square_free(grid));
        REQUIRE(discrepancy(grid) == static_cast<long long>(n) * n / 2);
    }
}

TEST_CASE("checks are reproducible run to run") {
    VerifyOptions opts;
    opts.max_n = 5;
    const VerificationOutcome a = verify_lemma3(opts);
    const VerificationOutcome b = verify_lemma3(opts);
    REQUIRE(a.status == b.status);
    REQUIRE(a.counts == b.counts);
    REQUIRE(a.note == b.note);
    REQUIRE(a.witnesses == b.witnesses);

    const VerificationOutcome c = property_check_lemma4(lemma4_default_samples());
    const VerificationOutcome d = property_check_lemma4(lemma4_default_samples());
    REQUIRE(c.counts == d.counts);
}

TEST_CASE("outcome serialization") {
    VerificationOutcome o;
    o.name = "demo";
    o.status = CheckStatus::fail;
    o.counts = {{"cases", 3}, {"bad", 1}};
    o.note = "details";
    o.witnesses.push_back(BinaryMatrix::from_rows({"+-", "--"}));
    o.seconds = 0.25;

    const auto j = nlohmann::ordered_json::parse(outcome_json_line(o));
    REQUIRE(j["name"] == "demo");
    REQUIRE(j["status"] == "fail");
    REQUIRE(j["counts"]["cases"] == 3);
    REQUIRE(j["counts"]["bad"] == 1);
    REQUIRE(j["note"] == "details");
    REQUIRE(j["witnesses"][0][0] == "+-");
    REQUIRE(j["witnesses"][0][1] == "--");

    std::ostringstream text;
    print_outcome_text(text, o);
    REQUIRE(text.str().find("demo: fail") != std::string::npos);
    REQUIRE(text.str().find("cases = 3") != std::string::npos);
}

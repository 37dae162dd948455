#include <catch2/catch_amalgamated.hpp>

#include "flagpos/flags.hpp"
#include "flagpos/generators.hpp"

using namespace flagpos;

namespace {

// Generic representative of a two-step flag in R^4 with dimension set {1, 3}.
Mat two_step_rep(const Rat& a, const Rat& b, const Rat& c, const Rat& d, const Rat& e) {
    Mat m(4, 3);
    m(0, 0) = 1;
    m(1, 0) = a;
    m(1, 1) = 1;
    m(2, 0) = b;
    m(2, 2) = 1;
    m(3, 0) = c;
    m(3, 1) = d;
    m(3, 2) = e;
    return m;
}

// The positive three-step flag in R^3 with unit parameters.
Flag fl3_unit() {
    Mat m(3, 3);
    m(0, 0) = 1;
    m(1, 0) = 2;
    m(1, 1) = 1;
    m(2, 0) = 1;
    m(2, 1) = 1;
    m(2, 2) = 1;
    return Flag(3, {1, 2}, m);
}

// The positive 2-plane in R^4 with unit parameters.
Flag gr24_unit() {
    Mat m(4, 2);
    m(0, 0) = 1;
    m(1, 0) = 1;
    m(1, 1) = 1;
    m(2, 1) = 1;
    m(3, 0) = -1;
    m(3, 1) = 1;
    return Flag(4, {2}, m);
}

Int plucker_at(const PluckerVector& p, std::initializer_list<int> members) {
    return p.at(SubsetIndex(p.n, std::vector<int>(members)));
}

}  // namespace

TEST_CASE("plucker coordinates of the generic two-step flag") {
    const Flag v(4, {1, 3}, two_step_rep(1, 2, 3, 4, 5));
    const PluckerVector level1 = plucker(v, 1);
    CHECK(plucker_at(level1, {1}) == 1);
    CHECK(plucker_at(level1, {2}) == 1);
    CHECK(plucker_at(level1, {3}) == 2);
    CHECK(plucker_at(level1, {4}) == 3);

    const PluckerVector level3 = plucker(v, 3);
    CHECK(plucker_at(level3, {1, 2, 3}) == 1);
    CHECK(plucker_at(level3, {1, 2, 4}) == 5);
    CHECK(plucker_at(level3, {1, 3, 4}) == -4);
    CHECK(plucker_at(level3, {2, 3, 4}) == -11);

    CHECK_THROWS_AS(plucker(v, 2), ArgumentError);
}

TEST_CASE("plucker coordinate formulas hold across parameter tuples") {
    Rng rng(43);
    for (int trial = 0; trial < 8; ++trial) {
        const Rat a = rng.rational(-3, 3, 2), b = rng.rational(-3, 3, 2), c = rng.rational(-3, 3, 2);
        const Rat d = rng.rational(-3, 3, 2), e = rng.rational(-3, 3, 2);
        const Flag v(4, {1, 3}, two_step_rep(a, b, c, d, e));

        std::vector<std::pair<SubsetIndex, Rat>> lvl1, lvl3;
        lvl1.emplace_back(SubsetIndex(4, {1}), Rat(1));
        lvl1.emplace_back(SubsetIndex(4, {2}), a);
        lvl1.emplace_back(SubsetIndex(4, {3}), b);
        lvl1.emplace_back(SubsetIndex(4, {4}), c);
        lvl3.emplace_back(SubsetIndex(4, {1, 2, 3}), Rat(1));
        lvl3.emplace_back(SubsetIndex(4, {1, 2, 4}), e);
        lvl3.emplace_back(SubsetIndex(4, {1, 3, 4}), -d);
        lvl3.emplace_back(SubsetIndex(4, {2, 3, 4}), -a * d + c - b * e);

        CHECK(plucker(v, 1) == PluckerVector::from_values(4, 1, lvl1));
        CHECK(plucker(v, 3) == PluckerVector::from_values(4, 3, lvl3));
    }
}

TEST_CASE("plucker vector of the standard flag") {
    const Flag std4(4, {1, 2, 3}, Mat::identity(4));
    for (int k : {1, 2, 3}) {
        const PluckerVector p = plucker(std4, k);
        for (const auto& [I, z] : p.coords) {
            std::vector<int> leading(k);
            for (int i = 0; i < k; ++i) leading[i] = i + 1;
            CHECK(z == (I.members == leading ? 1 : 0));
        }
    }
}

TEST_CASE("plucker vector is representative independent") {
    Rng rng(47);
    for (int trial = 0; trial < 12; ++trial) {
        const Flag v = random_plucker_positive_flag(4, {1, 3}, rng);
        // block upper-triangular change of basis fixing levels 1 and 3
        Mat u = Mat::identity(4);
        u(0, 1) = rng.rational(-2, 2, 2);
        u(0, 2) = rng.rational(-2, 2, 2);
        u(1, 2) = rng.rational(-2, 2, 2);
        u(1, 1) = rng.positive_rational(2, 2);
        u(2, 2) = rng.positive_rational(2, 2);
        u(0, 3) = rng.rational(-2, 2, 2);
        u(1, 3) = rng.rational(-2, 2, 2);
        u(2, 3) = rng.rational(-2, 2, 2);
        u(3, 3) = rng.positive_rational(2, 2);
        const Flag w(4, {1, 3}, v.rep * u);
        CHECK(plucker(v, 1) == plucker(w, 1));
        CHECK(plucker(v, 3) == plucker(w, 3));
    }
}

TEST_CASE("classification by plucker signs") {
    CHECK(classify_plucker(fl3_unit()).plucker == PluckerClass::kPositive);
    CHECK(classify_plucker(gr24_unit()).plucker == PluckerClass::kPositive);
    CHECK(classify_plucker(Flag(4, {1, 2, 3}, Mat::identity(4))).plucker ==
          PluckerClass::kNonnegNotPositive);

    const auto [flag, cert] = converse_counterexample(4, {1, 3}, 1, 3);
    CHECK(classify_plucker(flag).plucker == PluckerClass::kNonnegNotPositive);

    const Flag mixed(4, {1, 3}, two_step_rep(1, 2, 3, 4, 5));
    CHECK(classify_plucker(mixed).plucker == PluckerClass::kNotNonneg);
}

TEST_CASE("totally positive witness for complete flags") {
    const Flag point(1, {}, Mat::identity(1));
    CHECK(tp_witness_complete(point) == Mat::identity(1));

    Mat fl2(2, 2);
    fl2(0, 0) = 1;
    fl2(1, 0) = 1;
    fl2(1, 1) = 1;
    const Mat g2 = tp_witness_complete(Flag(2, {1}, fl2));
    CHECK(is_totally_positive(g2));

    const auto [g3, t3] = tp_witness_complete_detail(fl3_unit());
    CHECK(is_totally_positive(g3));
    CHECK(t3 == 1);

    CHECK_THROWS_AS(tp_witness_complete(Flag(3, {1, 2}, Mat::identity(3))), StateError);
}

TEST_CASE("witness represents the same flag") {
    Rng rng(53);
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> full(n - 1);
        for (int i = 0; i < n - 1; ++i) full[i] = i + 1;
        for (int trial = 0; trial < 5; ++trial) {
            const Flag v = random_plucker_positive_flag(n, full, rng);
            const Mat g = tp_witness_complete(v);
            CHECK(is_totally_positive(g));
            const Flag as_flag(n, full, g);
            for (int k : full) CHECK(plucker(as_flag, k) == plucker(v, k));
        }
    }
}

TEST_CASE("completion of an interval flag to a positive complete flag") {
    const Flag already = fl3_unit();
    CHECK(complete_flag(already).rep == already.rep);

    Mat line(3, 1);
    for (int i = 0; i < 3; ++i) line(i, 0) = 1;
    const Flag completed = complete_flag(Flag(3, {1}, line));
    CHECK(completed.complete());
    CHECK(classify_plucker(completed).plucker == PluckerClass::kPositive);
    CHECK(spans_equal(completed.rep.columns(0, 1), line));

    const Flag gr = gr24_unit();
    const Flag full = complete_flag(gr);
    CHECK(full.complete());
    CHECK(classify_plucker(full).plucker == PluckerClass::kPositive);
    CHECK(spans_equal(full.rep.columns(0, 2), gr.rep.columns(0, 2)));

    Rng gap_rng(1);
    CHECK_THROWS_AS(complete_flag(Flag(4, {1, 3}, random_tp_matrix(4, gap_rng))), ArgumentError);
    Mat bad(3, 1);
    bad(0, 0) = 1;
    bad(2, 0) = -1;
    CHECK_THROWS_AS(complete_flag(Flag(3, {1}, bad)), StateError);
}

TEST_CASE("lusztig positivity decisions") {
    const PositivityClass fl3 = is_lusztig_positive(fl3_unit());
    REQUIRE(fl3.lusztig.has_value());
    CHECK(*fl3.lusztig == LusztigStatus::kPositiveWithWitness);
    REQUIRE(fl3.witness.has_value());
    CHECK(is_totally_positive(*fl3.witness));

    const auto [bad_flag, cert] = converse_counterexample(4, {1, 3}, 1, 3);
    const PositivityClass bad = is_lusztig_positive(bad_flag);
    REQUIRE(bad.lusztig.has_value());
    CHECK(*bad.lusztig == LusztigStatus::kNotTnnWithCertificate);
    REQUIRE(bad.certificate.has_value());
    CHECK(validate_certificate(bad_flag, *bad.certificate));

    // boundary point with an interval K: determined not positive, never undecided
    const PositivityClass boundary = is_lusztig_positive(Flag(4, {1, 2, 3}, Mat::identity(4)));
    REQUIRE(boundary.lusztig.has_value());
    CHECK(*boundary.lusztig == LusztigStatus::kNotPositive);
    CHECK(boundary.plucker == PluckerClass::kNonnegNotPositive);
}

TEST_CASE("lusztig positivity with a caller-supplied refinement") {
    Rng rng(59);
    const Mat g = random_tp_matrix(4, rng);
    const Flag sparse(4, {1, 3}, g);
    const Flag refined(4, {1, 2, 3}, g);

    const PositivityClass alone = is_lusztig_positive(sparse);
    REQUIRE(alone.lusztig.has_value());
    CHECK(*alone.lusztig == LusztigStatus::kUndecided);

    const PositivityClass helped = is_lusztig_positive(sparse, refined);
    REQUIRE(helped.lusztig.has_value());
    CHECK(*helped.lusztig == LusztigStatus::kPositiveWithWitness);
    REQUIRE(helped.witness.has_value());
    CHECK(is_totally_positive(*helped.witness));

    // refinement must agree with the flag on K
    const Flag wrong(4, {1, 2, 3}, random_tp_matrix(4, rng));
    CHECK_THROWS_AS(is_lusztig_positive(sparse, wrong), ArgumentError);
}

TEST_CASE("lusztig containment: witnessed flags are plucker positive") {
    Rng rng(61);
    for (int trial = 0; trial < 10; ++trial) {
        const Flag v = random_plucker_positive_flag(3, {1, 2}, rng);
        const PositivityClass pc = is_lusztig_positive(v);
        REQUIRE(pc.lusztig.has_value());
        CHECK(*pc.lusztig == LusztigStatus::kPositiveWithWitness);
        CHECK(pc.plucker == PluckerClass::kPositive);
    }
}

TEST_CASE("acting by a totally positive matrix makes nonnegative flags positive") {
    Rng rng(67);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = rng.uniform(2, 4);
        std::vector<int> K{1};
        if (n - 1 > 1) K.push_back(n - 1);
        const Flag w = random_tnn_flag(n, K, rng);
        const Mat f = gauss_kernel_matrix(n, Rat(1, rng.uniform(2, 5)));
        const Flag moved(n, w.K, f * w.rep);
        CHECK(classify_plucker(moved).plucker == PluckerClass::kPositive);
    }
}

TEST_CASE("cyclic shift moves coordinate lines down") {
    Mat e2(3, 1);
    e2(1, 0) = 1;
    for (Parity eps : {Parity::kEven, Parity::kOdd}) {
        const Flag shifted = cyclic_shift(Flag(3, {1}, e2), eps);
        CHECK(spans_equal(shifted.rep.columns(0, 1), Mat::basis_column(3, 1)));
    }
}

TEST_CASE("cyclic shift rotates plucker coordinates at matching parity") {
    const Flag v = gr24_unit();  // K = {2}, even parity
    const Flag shifted = cyclic_shift(v, Parity::kEven);
    const PluckerVector before = plucker(v, 2);
    const PluckerVector after = plucker(shifted, 2);
    // after(I) must be proportional to before(rotate_up(I)) with one global sign
    int global = 0;
    for (const auto& [I, z] : after.coords) {
        const Int& ref = before.at(cyclic_rotate_up(I));
        if (z == 0) {
            CHECK(ref == 0);
            continue;
        }
        const int s = (z == ref) ? 1 : (z == -ref ? -1 : 0);
        REQUIRE(s != 0);
        if (global == 0) global = s;
        CHECK(s == global);
    }

    // n-fold shift with matching parity returns the same projective point
    Flag cycled = v;
    for (int i = 0; i < 4; ++i) cycled = cyclic_shift(cycled, Parity::kEven);
    CHECK(plucker(cycled, 2) == before);
}

TEST_CASE("counterexample construction for a gapped dimension set") {
    const auto [flag, cert] = converse_counterexample(4, {1, 3}, 1, 3);
    REQUIRE(flag.rep.cols() == 3);
    CHECK(flag.rep.column(0) == std::vector<Rat>{Rat(1), Rat(0), Rat(0), Rat(1)});
    CHECK(flag.rep.column(1) == std::vector<Rat>{Rat(0), Rat(1), Rat(0), Rat(0)});
    CHECK(flag.rep.column(2) == std::vector<Rat>{Rat(0), Rat(0), Rat(1), Rat(0)});

    // the skipped order 2 carries a negative left-justified minor on rows {2, 4}
    CHECK(minor(flag.rep, SubsetIndex(4, {2, 4}), SubsetIndex(3, {1, 2})) == Rat(-1));
    // orders 1 and 3 are nonnegative
    CHECK(plucker(flag, 1).all_nonnegative());
    CHECK(plucker(flag, 3).all_nonnegative());

    CHECK(cert.kind == CertificateKind::kRestrictionPattern);
    CHECK(cert.level_lo == 1);
    CHECK(cert.level_hi == 3);
    CHECK(cert.m == 4);
    CHECK(cert.c == Rat(1));
    CHECK(validate_certificate(flag, cert));

    CHECK_THROWS_AS(converse_counterexample(4, {1, 2}, 1, 2), ArgumentError);
    CHECK_THROWS_AS(converse_counterexample(4, {1, 3}, 1, 2), ArgumentError);
    CHECK_THROWS_AS(converse_counterexample(4, {2, 4}, 2, 4), ArgumentError);  // K escapes [1, n-1]
}

TEST_CASE("counterexample families validate across sizes") {
    {
        const auto [flag, cert] = converse_counterexample(7, {2, 5}, 2, 5);
        CHECK(classify_plucker(flag).plucker == PluckerClass::kNonnegNotPositive);
        CHECK(validate_certificate(flag, cert));
    }
    {
        const auto [flag, cert] = converse_counterexample(6, {1, 2, 4}, 2, 4);
        CHECK(classify_plucker(flag).plucker == PluckerClass::kNonnegNotPositive);
        CHECK(validate_certificate(flag, cert));
        for (int k : {1, 2, 4}) CHECK(plucker(flag, k).all_nonnegative());
        // the skipped order 3 has a mixed sign pattern among left-justified minors
        const Flag probe(6, {3}, flag.rep);
        CHECK_FALSE(plucker(probe, 3).all_nonnegative());
    }
}

TEST_CASE("cyclic counterexample spans and certificate") {
    const auto [w, x, cert] = cyclic_counterexample(3, {1, 2}, Parity::kOdd);
    CHECK(spans_equal(w.rep.columns(0, 1), Mat{{Rat(1)}, {Rat(1)}, {Rat(0)}}));
    CHECK(spans_equal(w.rep.columns(0, 2),
                      Mat{{Rat(1), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}));
    // the shift of the first constituent is the line through e_1 + e_3 (odd parity)
    Mat expect(3, 1);
    expect(0, 0) = 1;
    expect(2, 0) = 1;
    CHECK(spans_equal(x.rep.columns(0, 1), expect));
    CHECK(cert.kind == CertificateKind::kRestrictionPattern);
    CHECK(cert.m == 3);
    CHECK(validate_certificate(x, cert));

    const auto [w2, x2, cert2] = cyclic_counterexample(5, {2, 4}, Parity::kEven);
    CHECK(validate_certificate(x2, cert2));
    // the unshifted flag is nonnegative at every complete-flag order
    const Flag w2_complete(5, {1, 2, 3, 4}, w2.rep);
    for (int k = 1; k <= 4; ++k) CHECK(plucker(w2_complete, k).all_nonnegative());

    const auto [w3, x3, cert3] = cyclic_counterexample(4, {1, 3}, Parity::kOdd);
    const Flag w3_complete(4, {1, 2, 3}, w3.rep);
    for (int k = 1; k <= 3; ++k) CHECK(plucker(w3_complete, k).all_nonnegative());

    CHECK_THROWS_AS(cyclic_counterexample(4, {2}, Parity::kOdd), ArgumentError);
}

TEST_CASE("certify_not_tnn finds nothing on positive flags") {
    Rng rng(71);
    for (int trial = 0; trial < 8; ++trial) {
        const Flag v = random_plucker_positive_flag(4, {1, 3}, rng);
        CHECK_FALSE(certify_not_tnn(v).has_value());
    }
    for (int trial = 0; trial < 5; ++trial) {
        const Flag v = random_plucker_positive_flag(5, {2, 4}, rng);
        CHECK_FALSE(certify_not_tnn(v).has_value());
    }
}

TEST_CASE("three-term plucker relations hold for plane coordinates") {
    Rng rng(83);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.uniform(4, 6);
        Mat rep = random_rational_matrix(n, 2, rng);
        while (rank(rep) < 2) rep = random_rational_matrix(n, 2, rng);
        const Flag v(n, {2}, rep);
        const PluckerVector pv = plucker(v, 2);
        const auto coord = [&](int x, int y) { return pv.at(SubsetIndex(n, {x, y})); };
        for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b)
                for (int c = b + 1; c <= n; ++c)
                    for (int d = c + 1; d <= n; ++d)
                        CHECK(coord(a, b) * coord(c, d) - coord(a, c) * coord(b, d) +
                                  coord(a, d) * coord(b, c) ==
                              0);
    }
}

TEST_CASE("certify_not_tnn flags mixed-sign coordinates") {
    const Flag mixed(4, {1, 3}, two_step_rep(1, 2, 3, 4, 5));
    const auto cert = certify_not_tnn(mixed);
    REQUIRE(cert.has_value());
    CHECK(cert->kind == CertificateKind::kNegativeCoordinate);
    CHECK(validate_certificate(mixed, *cert));
    // a spoiled certificate no longer validates
    ObstructionCertificate forged = *cert;
    forged.negative_value = -forged.negative_value;
    CHECK_FALSE(validate_certificate(mixed, forged));
}

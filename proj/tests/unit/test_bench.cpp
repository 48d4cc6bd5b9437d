#include "doctest.h"

#include "json.hpp"
#include "projlin/bench.hpp"
#include "projlin/error.hpp"

using namespace projlin;
using namespace projlin::bench;
using Q = Rational;

namespace {

Q q(Int128 v) { return to_rational(v); }

// a . x + c over the rational truth, for line and plane instances
Q residual(const std::vector<Int128>& row, const std::vector<Q>& x) {
    Q acc = q(row.back());
    for (std::size_t i = 0; i < x.size(); ++i) acc += q(row[i]) * x[i];
    return acc;
}

} // namespace

TEST_CASE("family names") {
    CHECK(parse_family("near-parallel-lines") == Family::NearParallelLines);
    CHECK(parse_family("near-coplanar-planes") == Family::NearCoplanarPlanes);
    CHECK(parse_family("sliver-triangle") == Family::SliverTriangle);
    try {
        (void)parse_family("near-parallel-planes");
        FAIL("expected UnknownFamily");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnknownFamily);
    }
    CHECK_THROWS_AS((void)gen_near_degenerate(Family::NearParallelLines, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("generated ground truth satisfies the instance exactly") {
    for (int t : {1, 2, 17, 40}) {
        for (const auto& in : gen_near_degenerate(Family::NearParallelLines, t, 5, 50)) {
            CHECK(residual(in.rows[0], in.truth) == 0);
            CHECK(residual(in.rows[1], in.truth) == 0);
        }
        for (const auto& in : gen_near_degenerate(Family::NearCoplanarPlanes, t, 5, 50)) {
            for (const auto& row : in.rows) CHECK(residual(row, in.truth) == 0);
        }
        for (const auto& in : gen_near_degenerate(Family::SliverTriangle, t, 5, 50)) {
            CHECK(in.truth[0] + in.truth[1] + in.truth[2] == 1);
            for (std::size_t k = 0; k < 2; ++k) {
                Q acc = 0;
                for (std::size_t i = 0; i < 3; ++i) acc += in.truth[i] * q(in.rows[i][k]) / q(in.rows[i][2]);
                CHECK(acc == q(in.rows[3][k]) / q(in.rows[3][2]));
            }
        }
    }
}

TEST_CASE("corpus is deterministic and inputs are float-exact") {
    const auto a = gen_near_degenerate(Family::SliverTriangle, 12, 99, 20);
    const auto b = gen_near_degenerate(Family::SliverTriangle, 12, 99, 20);
    const auto c = gen_near_degenerate(Family::SliverTriangle, 12, 100, 20);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].rows == b[i].rows);
        CHECK(a[i].truth == b[i].truth);
        differs = differs || a[i].rows != c[i].rows;
    }
    CHECK(differs);

    const Int128 limit = Int128(1) << 53;
    for (const auto f : {Family::NearParallelLines, Family::NearCoplanarPlanes, Family::SliverTriangle}) {
        for (const auto& in : gen_near_degenerate(f, 40, 3, 50)) {
            for (const auto& row : in.rows) {
                for (const Int128 v : row) CHECK((v < limit && v > -limit));
            }
        }
    }
}

TEST_CASE("mild instances are accurate on every path") {
    PrecisionConfig cfg;
    cfg.t_lo = cfg.t_hi = 1;
    cfg.seed = 11;
    const auto recs = run_precision(cfg);
    REQUIRE(recs.size() == 4);
    for (const auto& r : recs) CHECK(*r.max_rel_err < 0x1p-40);
}

TEST_CASE("rational scalars report zero error everywhere") {
    for (const auto f : {Family::NearParallelLines, Family::NearCoplanarPlanes, Family::SliverTriangle}) {
        PrecisionConfig cfg;
        cfg.family = f;
        cfg.t_lo = 1;
        cfg.t_hi = 40;
        cfg.samples = 4;
        cfg.mode = ScalarMode::Rational;
        for (const auto& r : run_precision(cfg)) {
            CHECK(*r.max_rel_err == 0.0);
            CHECK(*r.median_rel_err == 0.0);
        }
    }
}

TEST_CASE("homogeneous output is exact inside the integer envelope") {
    // |q * c2| < 2^(t + 15) keeps every product of the 2D kernel below 2^53
    PrecisionConfig cfg;
    cfg.t_lo = 1;
    cfg.t_hi = 38;
    cfg.path = "projective_hom";
    cfg.samples = 32;
    for (const auto& r : run_precision(cfg)) CHECK(*r.max_rel_err == 0.0);

    cfg.mode = ScalarMode::Int;
    cfg.t_hi = 40;
    for (const auto f : {Family::NearParallelLines, Family::NearCoplanarPlanes, Family::SliverTriangle}) {
        cfg.family = f;
        for (const auto& r : run_precision(cfg)) CHECK(*r.max_rel_err == 0.0);
    }
}

TEST_CASE("precision records: fields, order, determinism") {
    PrecisionConfig cfg;
    cfg.family = Family::NearCoplanarPlanes;
    cfg.t_lo = 3;
    cfg.t_hi = 5;
    cfg.samples = 8;
    cfg.seed = 7;
    const auto a = run_precision(cfg);
    const auto b = run_precision(cfg);
    REQUIRE(a.size() == 12);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(to_json(a[i]) == to_json(b[i]));
    CHECK(a[0].path == "projective");
    CHECK(a[1].path == "projective_hom");
    CHECK(a[2].path == "cramer");
    CHECK(a[3].path == "gauss");
    CHECK(*a[4].t == 4);

    const auto j = nlohmann::json::parse(to_json(a[0]));
    CHECK(j.size() == 7);
    CHECK(j["family"] == "near-coplanar-planes");
    CHECK(j["samples"] == 8);
    CHECK(j["ns_per_op"].is_null());
    CHECK(to_json(a[0]).rfind("{\"family\":", 0) == 0);

    cfg.mode = ScalarMode::Int;
    CHECK(run_precision(cfg).size() == 6);
    cfg.path = "gauss";
    CHECK_THROWS_AS((void)run_precision(cfg), std::invalid_argument);
}

TEST_CASE("throughput smoke") {
    for (const auto op : {ThroughputOp::Meet2, ThroughputOp::Meet3, ThroughputOp::Solve3}) {
        ThroughputConfig cfg;
        cfg.op = op;
        cfg.batch = 1;
        cfg.repetitions = 2;
        const auto recs = run_throughput(cfg);
        REQUIRE(recs.size() == 3);
        for (const auto& r : recs) {
            CHECK(*r.ns_per_op > 0);
            CHECK(r.samples == 1);
            CHECK(!r.t);
            CHECK(r.family == to_string(op));
        }
    }
    CHECK(parse_throughput_op("solve3") == ThroughputOp::Solve3);
    CHECK_THROWS_AS((void)parse_throughput_op("solve5"), std::invalid_argument);
    ThroughputConfig empty;
    empty.batch = 0;
    CHECK_THROWS_AS((void)run_throughput(empty), std::invalid_argument);
}

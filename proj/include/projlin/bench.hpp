#pragma once

// Precision and throughput experiments.
//
// Precision: near-degenerate instances with integer inputs and exact rational
// ground truth, solved by the projective kernel and by the two reference
// solvers, errors measured exactly. Throughput: batched timing of the same
// operations on a pre-generated corpus.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "projlin/scalar.hpp"

namespace projlin::bench {

enum class Family { NearParallelLines, NearCoplanarPlanes, SliverTriangle };

const char* to_string(Family f) noexcept;
// Throws Error(UnknownFamily).
Family parse_family(std::string_view name);

// One generated problem. For the two intersection families `rows` are the
// line / plane coefficient vectors and `truth` the Euclidean intersection;
// for slivers `rows` are the homogeneous points v1, v2, v3, x0 and `truth`
// the barycentric weights of x0.
struct Instance {
    Family family;
    int t;
    std::vector<std::vector<Int128>> rows;
    std::vector<Rational> truth;
};

// Deterministic in (family, t, seed). Every input magnitude is below 2^53 so
// the float paths see the integers exactly. Throws std::invalid_argument for
// t < 1 or t > 40.
std::vector<Instance> gen_near_degenerate(Family family, int t, std::uint64_t seed, std::size_t count);

// One output line. Fields that do not apply to a report kind are null.
struct Record {
    std::string family;
    std::string path;
    std::optional<int> t;
    std::size_t samples = 0;
    std::optional<double> max_rel_err;
    std::optional<double> median_rel_err;
    std::optional<double> ns_per_op;
};

std::string to_json(const Record& r);

// Path names, in report order.
inline constexpr std::string_view kPathProjective = "projective";
inline constexpr std::string_view kPathProjectiveHom = "projective_hom";
inline constexpr std::string_view kPathCramer = "cramer";
inline constexpr std::string_view kPathGauss = "gauss";

struct PrecisionConfig {
    Family family = Family::NearParallelLines;
    int t_lo = 1;
    int t_hi = 40;
    std::uint64_t seed = 1;
    ScalarMode mode = ScalarMode::Float;
    std::size_t samples = 64;
    // Emit only this path when set.
    std::optional<std::string> path;
};

// Paths:
//   projective      kernel result, one division per coordinate at the end
//   projective_hom  the homogeneous kernel output against its exact value
//   cramer, gauss   reference solvers (not available in int mode)
// Error is normwise relative: max |x - x*| / max |x*|, evaluated exactly.
// A path that throws or returns a non-regular tag scores 1.
std::vector<Record> run_precision(const PrecisionConfig& cfg);

enum class ThroughputOp { Meet2, Meet3, Solve3 };

const char* to_string(ThroughputOp op) noexcept;
// Throws std::invalid_argument.
ThroughputOp parse_throughput_op(std::string_view name);

struct ThroughputConfig {
    ThroughputOp op = ThroughputOp::Meet2;
    std::size_t batch = 1000;
    int repetitions = 10;
    std::uint64_t seed = 1;
};

// One record per path (projective, gauss, cramer); ns_per_op is the minimum
// over repetitions. Float scalars only.
std::vector<Record> run_throughput(const ThroughputConfig& cfg);

} // namespace projlin::bench

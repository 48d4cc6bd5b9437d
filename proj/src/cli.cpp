#include "projlin/cli.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "projlin/barycentric.hpp"
#include "projlin/bench.hpp"
#include "projlin/error.hpp"
#include "projlin/geomops.hpp"

namespace projlin::cli {

namespace {

using json = nlohmann::json;

enum class Op { Meet2, Join2, Meet3, Join3, Bary2, Bary3, Solve };

struct OpInfo {
    Op op;
    std::string_view name;
    std::size_t count; // number of input vectors; 0 for solve
    std::size_t len;
};

constexpr OpInfo kOps[] = {
    {Op::Meet2, "meet2", 2, 3}, {Op::Join2, "join2", 2, 3}, {Op::Meet3, "meet3", 3, 4}, {Op::Join3, "join3", 3, 4},
    {Op::Bary2, "bary2", 4, 3}, {Op::Bary3, "bary3", 5, 4}, {Op::Solve, "solve", 0, 0},
};

class BadRecord : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const OpInfo& lookup(std::string_view name) {
    for (const auto& info : kOps) {
        if (info.name == name) return info;
    }
    throw BadRecord("unknown op: " + std::string(name));
}

// Integer-mode input bound. Products of up to four inputs (five for the
// weighted tetrahedron coordinates) summed over at most 24 terms must stay
// inside Int128.
Int128 int_bound(Op op) { return Int128(1) << (op == Op::Bary3 ? 24 : 30); }

template <Ring S>
S parse_value(const json& v, Op op);

template <>
double parse_value<double>(const json& v, Op) {
    if (!v.is_number()) throw BadRecord("expected a number");
    return v.get<double>();
}

template <>
Int128 parse_value<Int128>(const json& v, Op op) {
    if (!v.is_number_integer()) throw BadRecord("int mode needs integer inputs");
    const Int128 x = v.is_number_unsigned() ? Int128(v.get<std::uint64_t>()) : Int128(v.get<std::int64_t>());
    const Int128 bound = int_bound(op);
    if (x >= bound || x <= -bound) throw BadRecord("input outside the integer envelope 2^" + std::string(op == Op::Bary3 ? "24" : "30"));
    return x;
}

mpz_class parse_integer(const json& v) {
    if (!v.is_number_integer()) throw BadRecord("rational components must be integers");
    return mpz_class(v.dump());
}

template <>
Rational parse_value<Rational>(const json& v, Op) {
    if (v.is_number_integer()) return Rational(parse_integer(v));
    if (v.is_array()) {
        if (v.size() != 2) throw BadRecord("rational pair must be [numerator, denominator]");
        const mpz_class num = parse_integer(v[0]);
        const mpz_class den = parse_integer(v[1]);
        if (den == 0) throw BadRecord("zero denominator");
        return make_rational(num, den);
    }
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const auto slash = s.find('/');
        mpz_class num, den = 1;
        const bool ok = num.set_str(s.substr(0, slash), 10) == 0 &&
                        (slash == std::string::npos || den.set_str(s.substr(slash + 1), 10) == 0);
        if (!ok || s.empty() || s.find_first_of(" \t+") != std::string::npos) throw BadRecord("bad rational literal: " + s);
        if (den == 0) throw BadRecord("zero denominator");
        return make_rational(num, den);
    }
    throw BadRecord("rational inputs are integers, [num, den] pairs or \"p/q\" strings");
}

std::string format(double v) { return to_string(v); }
std::string format(Int128 v) { return to_string(v); }
std::string format(const Rational& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return "\"" + v.get_str() + "\"";
}

template <typename Seq>
std::string format_array(const Seq& values) {
    std::string out = "[";
    bool first = true;
    for (const auto& v : values) {
        if (!first) out += ',';
        out += format(v);
        first = false;
    }
    return out + "]";
}

template <Ring S>
struct Outcome {
    ProjTag tag = ProjTag::Degenerate;
    std::vector<S> homogeneous;
    std::optional<std::vector<S>> euclidean;
    std::optional<std::vector<S>> weights;
};

template <std::size_t N, Ring S>
std::array<S, N> fixed(const std::vector<S>& row) {
    std::array<S, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = row[i];
    return out;
}

template <Ring S, typename R>
Outcome<S> from_result(const R& r, std::size_t len) {
    Outcome<S> out;
    out.tag = r.tag();
    if (r.has_value()) {
        const auto& c = [&]() -> const auto& {
            if constexpr (requires { r.value().xi; }) {
                return r.value().xi;
            } else {
                return r.value().coords();
            }
        }();
        out.homogeneous.assign(c.begin(), c.end());
    } else {
        out.homogeneous.assign(len, S(0));
    }
    return out;
}

template <Ring S>
Outcome<S> evaluate(Op op, const std::vector<std::vector<S>>& in) {
    Outcome<S> out;
    switch (op) {
    case Op::Meet2: {
        const auto r = meet_lines2(Line2<S>(fixed<3>(in[0])), Line2<S>(fixed<3>(in[1])));
        out = from_result<S>(r, 3);
        if constexpr (Field<S>) {
            if (r.is_regular()) {
                const auto e = to_euclidean(r.value()).coords;
                out.euclidean.emplace(e.begin(), e.end());
            }
        }
        break;
    }
    case Op::Meet3: {
        const auto r = meet_planes3(Plane3<S>(fixed<4>(in[0])), Plane3<S>(fixed<4>(in[1])), Plane3<S>(fixed<4>(in[2])));
        out = from_result<S>(r, 4);
        if constexpr (Field<S>) {
            if (r.is_regular()) {
                const auto e = to_euclidean(r.value()).coords;
                out.euclidean.emplace(e.begin(), e.end());
            }
        }
        break;
    }
    case Op::Join2:
        out = from_result<S>(join_points2(HomPoint2<S>(fixed<3>(in[0])), HomPoint2<S>(fixed<3>(in[1]))), 3);
        break;
    case Op::Join3:
        out = from_result<S>(join_points3(HomPoint3<S>(fixed<4>(in[0])), HomPoint3<S>(fixed<4>(in[1])),
                                          HomPoint3<S>(fixed<4>(in[2]))),
                             4);
        break;
    case Op::Bary2: {
        const auto r = bary_triangle(HomPoint2<S>(fixed<3>(in[0])), HomPoint2<S>(fixed<3>(in[1])),
                                     HomPoint2<S>(fixed<3>(in[2])), HomPoint2<S>(fixed<3>(in[3])));
        out = from_result<S>(r, 4);
        if constexpr (Field<S>) {
            if (r.is_regular()) {
                const auto w = to_weights(r.value()).lambda;
                out.weights.emplace(w.begin(), w.end());
            }
        }
        break;
    }
    case Op::Bary3: {
        const auto r = bary_tetrahedron(HomPoint3<S>(fixed<4>(in[0])), HomPoint3<S>(fixed<4>(in[1])),
                                        HomPoint3<S>(fixed<4>(in[2])), HomPoint3<S>(fixed<4>(in[3])),
                                        HomPoint3<S>(fixed<4>(in[4])));
        out = from_result<S>(r, 5);
        if constexpr (Field<S>) {
            if (r.is_regular()) {
                const auto w = to_weights(r.value()).lambda;
                out.weights.emplace(w.begin(), w.end());
            }
        }
        break;
    }
    case Op::Solve: {
        const std::size_t n = in.size();
        DynLinSystem<S> sys;
        for (const auto& row : in) {
            sys.A.emplace_back(row.begin(), row.end() - 1);
            sys.b.push_back(row.back());
        }
        const auto r = solve_nonhomogeneous(sys);
        out.tag = r.tag();
        out.homogeneous = r.has_value() ? r.value() : std::vector<S>(n + 1, S(0));
        if constexpr (Field<S>) {
            if (r.is_regular()) {
                std::vector<S> e;
                for (std::size_t i = 0; i < n; ++i) e.push_back(S(out.homogeneous[i] / out.homogeneous[n]));
                out.euclidean = e;
            }
        }
        break;
    }
    }
    return out;
}

void check_shape(const OpInfo& info, const json& inputs) {
    if (!inputs.is_array()) throw BadRecord("inputs must be an array of arrays");
    for (const auto& row : inputs) {
        if (!row.is_array()) throw BadRecord("inputs must be an array of arrays");
    }
    if (info.op == Op::Solve) {
        const std::size_t n = inputs.size();
        if (n < 2 || n > 4) throw BadRecord("solve needs 2, 3 or 4 rows of [A | b]");
        for (const auto& row : inputs) {
            if (row.size() != n + 1) throw BadRecord("solve rows must have n + 1 entries");
        }
        return;
    }
    if (inputs.size() != info.count) {
        throw BadRecord(std::string(info.name) + " takes " + std::to_string(info.count) + " inputs");
    }
    for (const auto& row : inputs) {
        if (row.size() != info.len) {
            throw BadRecord(std::string(info.name) + " inputs have " + std::to_string(info.len) + " components");
        }
    }
}

template <Ring S>
std::string solve_typed(const OpInfo& info, const json& inputs, std::size_t line_no, ScalarMode mode) {
    std::vector<std::vector<S>> rows;
    for (const auto& row : inputs) {
        std::vector<S> r;
        for (const auto& v : row) r.push_back(parse_value<S>(v, info.op));
        rows.push_back(std::move(r));
    }
    const Outcome<S> res = evaluate<S>(info.op, rows);
    std::string out = "{\"line\":" + std::to_string(line_no) + ",\"op\":\"" + std::string(info.name) +
                      "\",\"scalar\":\"" + to_string(mode) + "\",\"tag\":\"" + to_string(res.tag) +
                      "\",\"homogeneous\":" + format_array(res.homogeneous);
    if (res.euclidean) out += ",\"euclidean\":" + format_array(*res.euclidean);
    if (res.weights) out += ",\"weights\":" + format_array(*res.weights);
    return out + "}";
}

std::string error_record(std::size_t line_no, const std::string& message) {
    return "{\"line\":" + std::to_string(line_no) + ",\"error\":" + json(message).dump() + "}";
}

std::optional<std::pair<int, int>> parse_t_range(const std::string& text) {
    try {
        const auto dots = text.find("..");
        std::size_t used = 0;
        if (dots == std::string::npos) {
            const int t = std::stoi(text, &used);
            if (used != text.size()) return std::nullopt;
            return std::pair{t, t};
        }
        const std::string lo = text.substr(0, dots), hi = text.substr(dots + 2);
        const int a = std::stoi(lo, &used);
        if (used != lo.size()) return std::nullopt;
        const int b = std::stoi(hi, &used);
        if (used != hi.size()) return std::nullopt;
        return std::pair{a, b};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace

std::string solve_line(std::string_view text, std::size_t line_no, ScalarMode default_mode, bool* ok) {
    if (ok) *ok = false;
    try {
        const json rec = json::parse(text);
        if (!rec.is_object()) throw BadRecord("record must be a JSON object");
        if (!rec.contains("op") || !rec["op"].is_string()) throw BadRecord("missing op");
        if (!rec.contains("inputs")) throw BadRecord("missing inputs");
        const OpInfo& info = lookup(rec["op"].get<std::string>());
        ScalarMode mode = default_mode;
        if (rec.contains("scalar")) {
            if (!rec["scalar"].is_string()) throw BadRecord("scalar must be a string");
            mode = parse_scalar_mode(rec["scalar"].get<std::string>());
        }
        check_shape(info, rec["inputs"]);
        std::string out;
        switch (mode) {
        case ScalarMode::Float: out = solve_typed<double>(info, rec["inputs"], line_no, mode); break;
        case ScalarMode::Int: out = solve_typed<Int128>(info, rec["inputs"], line_no, mode); break;
        case ScalarMode::Rational: out = solve_typed<Rational>(info, rec["inputs"], line_no, mode); break;
        }
        if (ok) *ok = true;
        return out;
    } catch (const json::exception&) {
        return error_record(line_no, "malformed JSON");
    } catch (const std::exception& e) {
        return error_record(line_no, e.what());
    }
}

BatchSummary run_batch(std::istream& in, std::ostream& out, ScalarMode default_mode) {
    BatchSummary summary;
    std::string line;
    while (std::getline(in, line)) {
        ++summary.lines;
        bool ok = false;
        out << solve_line(line, summary.lines, default_mode, &ok) << '\n';
        if (!ok) ++summary.errors;
    }
    return summary;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homogeneous-coordinate geometry kernel"};
    app.name("projlin");
    app.require_subcommand(1);

    std::string solve_scalar = "rational";
    std::string input_path;
    auto* solve = app.add_subcommand("solve", "Solve line-delimited JSON problems from stdin");
    solve->add_option("--scalar", solve_scalar, "Default scalar type: float, int or rational")
        ->check(CLI::IsMember({"float", "int", "rational"}));
    solve->add_option("--input", input_path, "Read problems from this file instead of stdin");

    std::string family = "near-parallel-lines";
    std::string t_range = "1..40";
    std::uint64_t seed = 1;
    std::string bench_scalar = "float";
    std::size_t samples = 64;
    std::string path;
    std::string op;
    std::size_t batch = 1000;
    int reps = 10;
    auto* bench_cmd = app.add_subcommand("bench", "Precision or throughput report as JSON lines");
    bench_cmd->add_option("--family", family, "near-parallel-lines, near-coplanar-planes or sliver-triangle");
    bench_cmd->add_option("--t", t_range, "Severity range A..B (or a single value)");
    bench_cmd->add_option("--seed", seed, "Corpus seed");
    bench_cmd->add_option("--scalar", bench_scalar, "float, int or rational")
        ->check(CLI::IsMember({"float", "int", "rational"}));
    bench_cmd->add_option("--samples", samples, "Instances per severity");
    bench_cmd->add_option("--path", path, "Report only this path");
    bench_cmd->add_option("--op", op, "Throughput mode: meet2, meet3 or solve3");
    bench_cmd->add_option("--batch", batch, "Throughput batch size");
    bench_cmd->add_option("--reps", reps, "Throughput repetitions (minimum is reported)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    if (*solve) {
        const ScalarMode mode = parse_scalar_mode(solve_scalar);
        BatchSummary summary;
        if (input_path.empty()) {
            summary = run_batch(in, out, mode);
        } else {
            std::ifstream file(input_path);
            if (!file) {
                err << "cannot open " << input_path << '\n';
                return 2;
            }
            summary = run_batch(file, out, mode);
        }
        return summary.errors ? 1 : 0;
    }

    try {
        if (!op.empty()) {
            if (bench_cmd->count("--family") || bench_cmd->count("--t") || bench_cmd->count("--path")) {
                err << "--op selects a throughput report; --family, --t and --path do not apply\n";
                return 2;
            }
            if (bench_scalar != "float") {
                err << "throughput reports use float scalars only\n";
                return 2;
            }
            bench::ThroughputConfig cfg;
            cfg.op = bench::parse_throughput_op(op);
            cfg.batch = batch;
            cfg.repetitions = reps;
            cfg.seed = seed;
            for (const auto& r : bench::run_throughput(cfg)) out << bench::to_json(r) << '\n';
            return 0;
        }
        const auto range = parse_t_range(t_range);
        if (!range) {
            err << "bad --t value: " << t_range << '\n';
            return 2;
        }
        bench::PrecisionConfig cfg;
        cfg.family = bench::parse_family(family);
        cfg.t_lo = range->first;
        cfg.t_hi = range->second;
        cfg.seed = seed;
        cfg.mode = parse_scalar_mode(bench_scalar);
        cfg.samples = samples;
        if (!path.empty()) cfg.path = path;
        for (const auto& r : bench::run_precision(cfg)) out << bench::to_json(r) << '\n';
        return 0;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 2;
    }
}

} // namespace projlin::cli

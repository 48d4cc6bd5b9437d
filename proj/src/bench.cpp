#include "projlin/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "projlin/barycentric.hpp"
#include "projlin/error.hpp"
#include "projlin/geomops.hpp"
#include "projlin/oracle.hpp"

namespace projlin::bench {

namespace {

using I = Int128;
using Q = Rational;
using Row = std::vector<I>;
using Result = std::optional<std::vector<Q>>;

constexpr FloatTolerance kExactZero{0.0};

I pow2(int k) { return I(1) << k; }

class Rng {
public:
    Rng(std::uint64_t seed, int t, Family family) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(t), static_cast<std::uint32_t>(family)};
        engine_.seed(seq);
    }

    std::int64_t integer(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
    }
    std::int64_t nonzero(std::int64_t lo, std::int64_t hi) {
        for (;;) {
            if (const auto v = integer(lo, hi); v != 0) return v;
        }
    }
    std::int64_t signed_in(std::int64_t lo, std::int64_t hi) { return integer(0, 1) ? integer(lo, hi) : -integer(lo, hi); }

private:
    std::mt19937_64 engine_;
};

Q q_of(I v) { return to_rational(v); }

void check_envelope(const Instance& in) {
    const I limit = pow2(53);
    for (const auto& row : in.rows) {
        for (const I v : row) {
            if (v >= limit || v <= -limit) throw std::logic_error("generated input exceeds 2^53");
        }
    }
}

Instance near_parallel_lines(Rng& rng, int t) {
    const I p = rng.signed_in(16, 31), q = rng.signed_in(16, 31);
    const I px = rng.integer(-16, 16), py = rng.integer(-16, 16);
    const I r = rng.nonzero(-8, 8);
    // second normal: 2^t n1 plus a perpendicular unit-scale nudge
    const I n2x = pow2(t) * p - q, n2y = pow2(t) * q + p;
    const I c1 = -(p * px + q * py);
    const I c2 = -(n2x * px + n2y * py) + r;
    // the offset r moves the intersection along n1's line by r / |n1|^2
    const Q s = make_rational(mpz_class(static_cast<long>(r)), mpz_class(static_cast<long>(p * p + q * q)));
    return {Family::NearParallelLines, t, {{p, q, c1}, {n2x, n2y, c2}}, {q_of(px) + s * q_of(q), q_of(py) - s * q_of(p)}};
}

Instance near_coplanar_planes(Rng& rng, int t) {
    Vec3<I> n1, n2, m;
    do {
        for (auto& v : n1) v = rng.integer(-8, 8);
        for (auto& v : n2) v = rng.integer(-8, 8);
        m = cross3(n1, n2);
    } while (m[0] == 0 && m[1] == 0 && m[2] == 0);
    Vec3<I> n3, p;
    for (std::size_t i = 0; i < 3; ++i) n3[i] = pow2(t) * (n1[i] + n2[i]) + m[i];
    for (auto& v : p) v = rng.integer(-4, 4);
    const I r = rng.nonzero(-8, 8);
    const I d1 = -dot(n1, p), d2 = -dot(n2, p), d3 = -dot(n3, p) + r;
    // n1 . m = n2 . m = 0, so the offset moves the point along m
    const Q s = make_rational(mpz_class(static_cast<long>(-r)), mpz_class(static_cast<long>(dot(m, m))));
    std::vector<Q> truth(3);
    for (std::size_t i = 0; i < 3; ++i) truth[i] = q_of(p[i]) + s * q_of(m[i]);
    return {Family::NearCoplanarPlanes, t,
            {{n1[0], n1[1], n1[2], d1}, {n2[0], n2[1], n2[2], d2}, {n3[0], n3[1], n3[2], d3}}, truth};
}

Instance sliver_triangle(Rng& rng, int t) {
    const I a = rng.signed_in(1, 8), b = rng.signed_in(1, 8);
    const I vx = rng.integer(-16, 16), vy = rng.integer(-16, 16);
    const I m = 2 * rng.integer(1, 7) + 1;
    const I beta = rng.integer(1, static_cast<std::int64_t>(m * pow2(t)) - 1);
    const I gamma = rng.integer(1, static_cast<std::int64_t>(m) - 1);
    // edge v1v2 has length 2^t |D|, the apex sits |D| off it
    const Row v1{vx, vy, 1};
    const Row v2{vx + pow2(t) * a, vy + pow2(t) * b, 1};
    const Row v3{vx + pow2(t - 1) * a - b, vy + pow2(t - 1) * b + a, 1};
    const Row x0{m * vx + beta * a - gamma * b, m * vy + beta * b + gamma * a, m};
    const Q l3 = make_rational(mpz_class(static_cast<long>(gamma)), mpz_class(static_cast<long>(m)));
    const Q l2 = make_rational(mpz_class(projlin::to_string(beta - gamma * pow2(t - 1))), mpz_class(projlin::to_string(m * pow2(t))));
    return {Family::SliverTriangle, t, {v1, v2, v3, x0}, {Q(1) - l2 - l3, l2, l3}};
}

template <Field S>
S scalar_of(I v) {
    if constexpr (std::is_same_v<S, Q>) {
        return q_of(v);
    } else {
        return static_cast<double>(v);
    }
}

template <std::size_t N, Field S>
Vec<S, N> vec_of(const Row& row) {
    Vec<S, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = scalar_of<S>(row[i]);
    return out;
}

template <Field S>
Q to_q(const S& v) {
    return to_rational(v);
}

template <Field S, std::size_t N>
std::vector<Q> to_q(const std::array<S, N>& v) {
    std::vector<Q> out;
    for (const auto& x : v) out.push_back(to_q(x));
    return out;
}

// Exact homogeneous kernel output, computed from oracle minors.
std::vector<Q> exact_cross(const std::vector<std::vector<Q>>& rows) {
    const std::size_t n = rows.size();
    std::vector<Q> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        oracle::DenseMatrix<Q> m(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t c2 = 0;
            for (std::size_t c = 0; c <= n; ++c) {
                if (c != k) m(r, c2++) = rows[r][c];
            }
        }
        const Q d = oracle::det(m);
        out[k] = (k % 2 == 0) ? d : Q(-d);
    }
    return out;
}

std::vector<std::vector<Q>> q_rows(const std::vector<Row>& rows) {
    std::vector<std::vector<Q>> out;
    for (const auto& r : rows) {
        std::vector<Q> row;
        for (const I v : r) row.push_back(q_of(v));
        out.push_back(row);
    }
    return out;
}

// The exact value of the weighted projective barycentric vector.
std::vector<Q> exact_bary(const Instance& in) {
    std::vector<std::vector<Q>> coord_rows(3, std::vector<Q>(4));
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t c = 0; c < 3; ++c) coord_rows[c][j] = q_of(in.rows[j][c]);
    }
    auto xi = exact_cross(coord_rows);
    for (std::size_t j = 0; j < 4; ++j) xi[j] *= q_of(in.rows[j][2]);
    return xi;
}

std::vector<Q> exact_hom(const Instance& in) {
    return in.family == Family::SliverTriangle ? exact_bary(in) : exact_cross(q_rows(in.rows));
}

// The reference solvers see Ax = b in its conventional Euclidean form.
template <Field S>
std::pair<oracle::DenseMatrix<S>, oracle::DenseVector<S>> euclidean_system(const Instance& in) {
    if (in.family == Family::SliverTriangle) {
        oracle::DenseMatrix<S> a(3, 3);
        oracle::DenseVector<S> b(3);
        for (std::size_t j = 0; j < 3; ++j) {
            a(0, j) = scalar_of<S>(in.rows[j][0]);
            a(1, j) = scalar_of<S>(in.rows[j][1]);
            a(2, j) = S(1);
        }
        const S w0 = scalar_of<S>(in.rows[3][2]);
        b[0] = S(scalar_of<S>(in.rows[3][0]) / w0);
        b[1] = S(scalar_of<S>(in.rows[3][1]) / w0);
        b[2] = S(1);
        return {a, b};
    }
    const std::size_t n = in.rows.size();
    oracle::DenseMatrix<S> a(n, n);
    oracle::DenseVector<S> b(n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a(r, c) = scalar_of<S>(in.rows[r][c]);
        b[r] = S(-scalar_of<S>(in.rows[r][n]));
    }
    return {a, b};
}

template <Field S>
Result solve_reference(const Instance& in, bool use_gauss) {
    try {
        const auto [a, b] = euclidean_system<S>(in);
        const auto x = use_gauss ? oracle::gauss_solve(a, b, kExactZero) : oracle::cramer_solve(a, b, kExactZero);
        std::vector<Q> out;
        for (const auto& v : x) out.push_back(to_q(v));
        return out;
    } catch (const Error&) {
        return std::nullopt;
    }
}

template <Field S>
Result solve_projective(const Instance& in) {
    switch (in.family) {
    case Family::NearParallelLines: {
        const auto r = meet_lines2(Line2<S>(vec_of<3, S>(in.rows[0])), Line2<S>(vec_of<3, S>(in.rows[1])), kExactZero);
        if (!r.is_regular()) return std::nullopt;
        return to_q(to_euclidean(r.value(), kExactZero).coords);
    }
    case Family::NearCoplanarPlanes: {
        const auto r = meet_planes3(Plane3<S>(vec_of<4, S>(in.rows[0])), Plane3<S>(vec_of<4, S>(in.rows[1])),
                                    Plane3<S>(vec_of<4, S>(in.rows[2])), kExactZero);
        if (!r.is_regular()) return std::nullopt;
        return to_q(to_euclidean(r.value(), kExactZero).coords);
    }
    case Family::SliverTriangle: {
        const auto r = bary_triangle(HomPoint2<S>(vec_of<3, S>(in.rows[0])), HomPoint2<S>(vec_of<3, S>(in.rows[1])),
                                     HomPoint2<S>(vec_of<3, S>(in.rows[2])), HomPoint2<S>(vec_of<3, S>(in.rows[3])),
                                     kExactZero);
        if (!r.is_regular()) return std::nullopt;
        return to_q(to_weights(r.value(), kExactZero).lambda);
    }
    }
    return std::nullopt;
}

// Homogeneous kernel output before any classification or rescaling.
template <Ring S, typename Conv>
std::vector<S> kernel_hom(const Instance& in, Conv conv) {
    auto row = [&]<std::size_t N>(std::size_t i) {
        Vec<S, N> v;
        for (std::size_t k = 0; k < N; ++k) v[k] = conv(in.rows[i][k]);
        return v;
    };
    std::vector<S> out;
    auto take = [&](const auto& arr) { out.assign(arr.begin(), arr.end()); };
    switch (in.family) {
    case Family::NearParallelLines:
        take(cross3(row.template operator()<3>(0), row.template operator()<3>(1)));
        break;
    case Family::NearCoplanarPlanes:
        take(cross4(row.template operator()<4>(0), row.template operator()<4>(1), row.template operator()<4>(2)));
        break;
    case Family::SliverTriangle: {
        const auto r = bary_triangle(HomPoint2<S>(row.template operator()<3>(0)), HomPoint2<S>(row.template operator()<3>(1)),
                                     HomPoint2<S>(row.template operator()<3>(2)), HomPoint2<S>(row.template operator()<3>(3)),
                                     kExactZero);
        if (r.has_value()) take(r.value().xi);
        else out.assign(4, S(0));
        break;
    }
    }
    return out;
}

// Int mode: exact homogeneous result, each coordinate and the divisor rounded
// to double once, then one float division.
Result solve_projective_int(const Instance& in) {
    const auto h = kernel_hom<I>(in, [](I v) { return v; });
    const I w = h.back();
    if (w == 0) return std::nullopt;
    std::vector<Q> out;
    const bool bary = in.family == Family::SliverTriangle;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) {
        const double v = static_cast<double>(h[i]) / static_cast<double>(w);
        out.push_back(to_rational(bary ? -v : v));
    }
    return out;
}

double rel_err(const Result& got, const std::vector<Q>& truth) {
    if (!got || got->size() != truth.size()) return 1.0;
    Q num = 0, den = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        num = std::max<Q>(num, abs((*got)[i] - truth[i]));
        den = std::max<Q>(den, abs(truth[i]));
    }
    return den == 0 ? num.get_d() : Q(num / den).get_d();
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2;
}

std::vector<std::string_view> paths_for(ScalarMode mode) {
    if (mode == ScalarMode::Int) return {kPathProjective, kPathProjectiveHom};
    return {kPathProjective, kPathProjectiveHom, kPathCramer, kPathGauss};
}

double path_error(std::string_view path, ScalarMode mode, const Instance& in, const std::vector<Q>& hom_truth) {
    if (path == kPathProjectiveHom) {
        std::vector<Q> got;
        switch (mode) {
        case ScalarMode::Float:
            for (double v : kernel_hom<double>(in, [](I x) { return static_cast<double>(x); })) got.push_back(to_rational(v));
            break;
        case ScalarMode::Int:
            for (I v : kernel_hom<I>(in, [](I x) { return x; })) got.push_back(q_of(v));
            break;
        case ScalarMode::Rational:
            got = kernel_hom<Q>(in, q_of);
            break;
        }
        return rel_err(got, hom_truth);
    }
    Result r;
    if (path == kPathProjective) {
        switch (mode) {
        case ScalarMode::Float: r = solve_projective<double>(in); break;
        case ScalarMode::Int: r = solve_projective_int(in); break;
        case ScalarMode::Rational: r = solve_projective<Q>(in); break;
        }
    } else {
        const bool gauss = path == kPathGauss;
        r = mode == ScalarMode::Rational ? solve_reference<Q>(in, gauss) : solve_reference<double>(in, gauss);
    }
    return rel_err(r, in.truth);
}

} // namespace

const char* to_string(Family f) noexcept {
    switch (f) {
    case Family::NearParallelLines: return "near-parallel-lines";
    case Family::NearCoplanarPlanes: return "near-coplanar-planes";
    case Family::SliverTriangle: return "sliver-triangle";
    }
    return "near-parallel-lines";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::NearParallelLines, Family::NearCoplanarPlanes, Family::SliverTriangle}) {
        if (name == to_string(f)) return f;
    }
    throw Error(ErrorCode::UnknownFamily, "unknown family: " + std::string(name));
}

std::vector<Instance> gen_near_degenerate(Family family, int t, std::uint64_t seed, std::size_t count) {
    if (t < 1 || t > 40) throw std::invalid_argument("severity t must be in 1..40");
    Rng rng(seed, t, family);
    std::vector<Instance> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        switch (family) {
        case Family::NearParallelLines: out.push_back(near_parallel_lines(rng, t)); break;
        case Family::NearCoplanarPlanes: out.push_back(near_coplanar_planes(rng, t)); break;
        case Family::SliverTriangle: out.push_back(sliver_triangle(rng, t)); break;
        }
        check_envelope(out.back());
    }
    return out;
}

std::string to_json(const Record& r) {
    nlohmann::ordered_json j;
    auto opt = [](const auto& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr); };
    j["family"] = r.family;
    j["path"] = r.path;
    j["t"] = opt(r.t);
    j["samples"] = r.samples;
    j["max_rel_err"] = opt(r.max_rel_err);
    j["median_rel_err"] = opt(r.median_rel_err);
    j["ns_per_op"] = opt(r.ns_per_op);
    return j.dump();
}

std::vector<Record> run_precision(const PrecisionConfig& cfg) {
    if (cfg.t_lo > cfg.t_hi) throw std::invalid_argument("empty t range");
    if (cfg.samples == 0) throw std::invalid_argument("samples must be positive");
    auto paths = paths_for(cfg.mode);
    if (cfg.path) {
        if (std::find(paths.begin(), paths.end(), *cfg.path) == paths.end()) {
            throw std::invalid_argument("path not available in this scalar mode: " + *cfg.path);
        }
        paths = {*std::find(paths.begin(), paths.end(), *cfg.path)};
    }
    std::vector<Record> out;
    for (int t = cfg.t_lo; t <= cfg.t_hi; ++t) {
        const auto corpus = gen_near_degenerate(cfg.family, t, cfg.seed, cfg.samples);
        std::vector<std::vector<Q>> hom_truth;
        for (const auto& in : corpus) hom_truth.push_back(exact_hom(in));
        for (const auto path : paths) {
            std::vector<double> errs;
            for (std::size_t i = 0; i < corpus.size(); ++i) errs.push_back(path_error(path, cfg.mode, corpus[i], hom_truth[i]));
            Record r;
            r.family = to_string(cfg.family);
            r.path = std::string(path);
            r.t = t;
            r.samples = corpus.size();
            r.max_rel_err = *std::max_element(errs.begin(), errs.end());
            r.median_rel_err = median(errs);
            out.push_back(r);
        }
    }
    return out;
}

const char* to_string(ThroughputOp op) noexcept {
    switch (op) {
    case ThroughputOp::Meet2: return "meet2";
    case ThroughputOp::Meet3: return "meet3";
    case ThroughputOp::Solve3: return "solve3";
    }
    return "meet2";
}

ThroughputOp parse_throughput_op(std::string_view name) {
    for (ThroughputOp op : {ThroughputOp::Meet2, ThroughputOp::Meet3, ThroughputOp::Solve3}) {
        if (name == to_string(op)) return op;
    }
    throw std::invalid_argument("unknown throughput op: " + std::string(name));
}

namespace {

volatile double g_sink = 0;

// N equations in N unknowns, stored row-wise as [a_1 .. a_N, c] with the
// meaning a . x + c = 0 (meet) or a . x = c (solve).
template <std::size_t N>
using Problem = std::array<Vec<double, N + 1>, N>;

template <std::size_t N>
std::vector<Problem<N>> throughput_corpus(std::size_t batch, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-(1 << 20), 1 << 20);
    std::vector<Problem<N>> out(batch);
    for (auto& p : out) {
        for (auto& row : p) {
            for (auto& v : row) v = static_cast<double>(dist(rng));
        }
    }
    return out;
}

template <std::size_t N>
double projective_once(const Problem<N>& p, bool solve_form) {
    EuclidPoint<N, double> e;
    if constexpr (N == 2) {
        const auto r = meet_lines2(Line2<double>(p[0]), Line2<double>(p[1]));
        if (!r.is_regular()) return 0;
        e = to_euclidean(r.value());
    } else if (solve_form) {
        LinSystem<3, double> sys;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) sys.A[i][j] = p[i][j];
            sys.b[i] = p[i][3];
        }
        const auto r = solve_nonhomogeneous(sys);
        if (!r.is_regular()) return 0;
        e = to_euclidean(r.value());
    } else {
        const auto r = meet_planes3(Plane3<double>(p[0]), Plane3<double>(p[1]), Plane3<double>(p[2]));
        if (!r.is_regular()) return 0;
        e = to_euclidean(r.value());
    }
    double s = 0;
    for (double v : e.coords) s += v;
    return s;
}

template <std::size_t N>
double reference_once(const Problem<N>& p, bool solve_form, bool gauss) {
    oracle::DenseMatrix<double> a(N, N);
    oracle::DenseVector<double> b(N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) a(i, j) = p[i][j];
        b[i] = solve_form ? p[i][N] : -p[i][N];
    }
    try {
        const auto x = gauss ? oracle::gauss_solve(a, b) : oracle::cramer_solve(a, b);
        double s = 0;
        for (double v : x) s += v;
        return s;
    } catch (const Error&) {
        return 0;
    }
}

template <std::size_t N>
std::vector<Record> time_paths(const ThroughputConfig& cfg, bool solve_form) {
    const auto corpus = throughput_corpus<N>(cfg.batch, cfg.seed);
    std::vector<Record> out;
    for (const auto name : {kPathProjective, kPathGauss, kPathCramer}) {
        double best = 0;
        for (int rep = 0; rep < cfg.repetitions; ++rep) {
            auto run = [&]<typename F>(F&& f) {
                double acc = 0;
                const auto start = std::chrono::steady_clock::now();
                for (const auto& p : corpus) acc += f(p);
                const auto stop = std::chrono::steady_clock::now();
                g_sink = g_sink + acc;
                return std::chrono::duration<double, std::nano>(stop - start).count();
            };
            double ns = 0;
            if (name == kPathProjective) {
                ns = run([&](const Problem<N>& p) { return projective_once<N>(p, solve_form); });
            } else {
                const bool gauss = name == kPathGauss;
                ns = run([&](const Problem<N>& p) { return reference_once<N>(p, solve_form, gauss); });
            }
            const double per_op = ns / static_cast<double>(corpus.size());
            if (rep == 0 || per_op < best) best = per_op;
        }
        Record r;
        r.family = to_string(cfg.op);
        r.path = std::string(name);
        r.samples = cfg.batch;
        // a zero reading on a coarse clock still has to be positive
        r.ns_per_op = std::max(best, 1e-3);
        out.push_back(r);
    }
    return out;
}

} // namespace

std::vector<Record> run_throughput(const ThroughputConfig& cfg) {
    if (cfg.batch == 0) throw std::invalid_argument("batch must be at least 1");
    if (cfg.repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
    switch (cfg.op) {
    case ThroughputOp::Meet2: return time_paths<2>(cfg, false);
    case ThroughputOp::Meet3: return time_paths<3>(cfg, false);
    case ThroughputOp::Solve3: return time_paths<3>(cfg, true);
    }
    return {};
}

} // namespace projlin::bench

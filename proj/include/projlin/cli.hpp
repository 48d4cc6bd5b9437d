#pragma once

// Batch frontend. `solve` reads one JSON problem per line and writes one JSON
// result per line; `bench` drives the precision and throughput reports.
//
// Problem:  {"op": "meet2", "inputs": [[1,0,-1],[0,1,-2]], "scalar": "rational"}
// Result:   {"line":1,"op":"meet2","scalar":"rational","tag":"regular",
//            "homogeneous":[1,2,1],"euclidean":[1,2]}
// Error:    {"line":3,"error":"..."}

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

#include "projlin/scalar.hpp"

namespace projlin::cli {

struct BatchSummary {
    std::size_t lines = 0;
    std::size_t errors = 0;
};

// Result (or error) record for one input line, without trailing newline.
std::string solve_line(std::string_view text, std::size_t line_no, ScalarMode default_mode, bool* ok = nullptr);

BatchSummary run_batch(std::istream& in, std::ostream& out, ScalarMode default_mode);

// Full command line handling. Returns the process exit status:
// 0 success, 1 malformed input present, 2 usage error.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace projlin::cli

#pragma once

#include <string>

namespace qalg {

// Command-line overrides applied on top of the document.
struct RunFlags {
    std::string task;   // overrides the document task when nonempty
    int max_degree = -1; // overrides the ring truncation degree when > 0
    int arity = -1;      // overrides arity / exponent caps when > 0
    int threads = -1;    // OpenMP thread count when > 0
};

struct RunResult {
    std::string report; // JSON report, newline-terminated
    int exit_code = 0;  // 0 ok, 1 input error, 2 mathematical check failed
};

// Parses and runs a problem document; never throws. All mathematics is
// exact, so the report bytes are identical across runs and thread counts.
RunResult run_document(const std::string& document_text, const RunFlags& flags);

} // namespace qalg

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/algebra.hpp"
#include "nichols/config.hpp"
#include "nichols/qfactor.hpp"
#include "nichols/traces.hpp"

namespace nichols {

struct RunOptions {
    std::string out_dir;  // reports and cache live here; empty: no files
    unsigned threads = 1;
    bool use_cache = true;
    std::string verify_override;  // "", "fast" or "full"
    bool progress = false;
};

struct TraceRow {
    std::string label;
    int rep_element = -1;  // group runs only
    long class_size = 1;
    TracePoly trace;
    QFactorization factorization;
    Scalar at_one;
    std::optional<Scalar> lambda;  // action on the integral
};

struct RunResult {
    std::string title;
    Field field = nullptr;
    std::string group_name;
    int letters = 0;
    IntPoly dims;
    bool complete = false;
    long dimension = -1;
    int top_degree = -1;
    std::vector<TraceRow> rows;
    std::vector<std::pair<std::string, bool>> checks;
    std::vector<std::string> notes;

    bool ok() const;
    const TraceRow* row_for_element(const FiniteGroup& G, int g) const;
};

RunResult run_config(const RunConfig& cfg, const RunOptions& opts);

// The braided vector space a config describes, without building anything.
Braiding braiding_from_config(const RunConfig& cfg);

// report.txt (human) and report.tsv (machine); byte-deterministic.
void write_reports(const RunResult& res, const std::string& out_dir);

}  // namespace nichols

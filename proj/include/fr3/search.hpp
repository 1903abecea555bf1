#pragma once

// Exhaustive enumeration of rank-3 based rings up to a bound on k, the sieved
// table search (parity -> cyclotomic -> d-number -> cubicity), and the
// end-to-end rank-3 classification.

#include "fr3/battery.hpp"
#include "fr3/rank3.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fr3 {

struct SearchConfig {
    long max_k = 100;
    int jobs = 1;
    long max_m = 64;            // bound for the separate l = 0 family report
    std::string out;            // JSONL path; empty = no file output
    std::string checkpoint;     // checkpoint file path; empty = no checkpoints
    bool resume = false;
};

struct TableRow {
    Rank3Ring ring;
    Int b, c;
    bool cyclotomic = false, dnumber = false;
    Kind kind = Kind::Cubic;
    std::string verdict;  // battery status, lower_snake_case
};

// Every canonical solution of the associativity equation with
// 0 <= l <= k <= max_k, each exactly once, ordered by (k,l,m,n).  The l = 0
// family (1,0,m,0) is infinite and therefore omitted here; callers bound it
// separately.
void enumerate_solutions(long max_k, const std::function<void(const Rank3Ring&)>& emit);

// Convenience: materialized list.
std::vector<Rank3Ring> enumerate_solutions(long max_k);

struct SearchResult {
    std::vector<TableRow> rows;  // l >= 1 sieve survivors, sorted by ring
    std::vector<TableRow> l0;    // K(1,0,m,0) for m <= max_m with battery verdicts
};

// Sieve order over l >= 1 candidates: parity (k, l odd) -> cyclotomic
// (c square) -> d-number (c | b^3) -> cubic kind; survivors get a full
// battery verdict.  Deterministic across worker counts and resume.  Writes
// config.out and config.out + ".l0.jsonl" when config.out is set.
SearchResult run_table_search(const SearchConfig& config);

std::string table_row_json(const TableRow& row);

struct ClassifyEntry {
    std::string name;
    Status status;
    std::string eliminator;  // empty for survivors
};

struct ClassifyReport {
    std::vector<ClassifyEntry> entries;
    std::vector<std::string> survivors;
};

// Full battery + center + near-group over all canonical rings with k <= max_k
// and the l = 0 family with m <= max_m, plus the pointed ring K(Z/3Z);
// cubic rings surviving the integer tests are handed to the spherical
// pipeline.  Pre: max_m >= 2, max_k >= 3.
ClassifyReport classify_rank3(long max_m = 64, long max_k = 3);

}  // namespace fr3

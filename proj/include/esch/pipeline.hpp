#pragma once

#include "esch/classify.hpp"
#include "esch/enumerate.hpp"

#include <functional>
#include <string>
#include <vector>

namespace esch {

enum class SearchThreshold { Basic, Homotopy, Homeomorphic, Diffeomorphic };
enum class OutputFormat { Csv, Json };

const char* to_string(SearchThreshold t);

struct SearchConfig {
    EnumerationRequest request;
    SearchThreshold threshold = SearchThreshold::Basic;
    int threads = 1;
    std::int64_t block_size = 1000;  // odd r values per block
    std::string checkpoint_dir;   // empty: no checkpointing
    bool progress = false;        // progress lines on stderr
};

struct PairReport {
    std::int64_t r = 0;
    InvariantRecord a, b;
    PairVerdict verdict;
};

/* Two-stage search: bucket spaces of equal |r| by the cheap invariants
 * (canonical |s|, plus p1 except at the homotopy threshold), then evaluate
 * and compare Kreck-Stolz invariants inside nontrivial buckets.
 * Deterministic output order (r, then parameters) for any thread count. */
std::vector<PairReport> search_pairs(const SearchConfig& cfg);

// Full records (basic + Kreck-Stolz) for every space in the range,
// in enumeration order.  The heavyweight documented mode.
std::vector<InvariantRecord> enumerate_records(const SearchConfig& cfg);

// Streaming variant: hands each finished r-block to the sink in order.
void enumerate_stream(const SearchConfig& cfg,
                      const std::function<void(std::vector<InvariantRecord>&&)>& sink);

// Spaces failing condition (C) in the range (basic layer only).
std::int64_t count_condition_c_failures(const SearchConfig& cfg);

// CSV schema: r,k1,k2,k3,l1,l2,l3,s,p1,cohom,condC,s1,s2,s3,s22
std::string record_csv_header();
std::string record_to_csv(const InvariantRecord& rec);
InvariantRecord record_from_csv(const std::string& line);

std::string pair_csv_header();
std::string pair_to_csv(const PairReport& rep);
PairReport pair_from_csv(const std::string& line);

std::string records_to_json(const std::vector<InvariantRecord>& recs);
std::string pairs_to_json(const std::vector<PairReport>& reps);

/* Reference tables of previously published invariant values, bundled for
 * regression: ids 4.1 .. 4.6.  reproduce_table recomputes every row and
 * accepts either the printed values or their simultaneous sign flip in
 * (s, s1, s2, s22). */
struct TableCheck {
    std::string id;
    std::string rendered;
    bool pass = false;
    std::string diff;  // first mismatch, empty when pass
};

TableCheck reproduce_table(const std::string& id);
std::vector<std::string> table_ids();

// Raw printed values of one reference table; rational columns are empty
// strings where a table does not carry them.
struct ReferenceRow {
    ParamPair params;
    std::int64_t r = 0, s = 0, p1 = 0;
    std::string s22, s2, s1;
};

std::vector<ReferenceRow> reference_rows(const std::string& id);

}  // namespace esch

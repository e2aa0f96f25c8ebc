#pragma once

#include "gwkit/series.hpp"
#include "gwkit/surface_invariants.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gwkit {

// Canonical text form of an exact scalar: "a/b" for rationals, Gaussian parts
// as "a+bi/c", polynomial content factored out ("(t1+t2)/2", "1/(2t1t2)").
// Never floats.
std::string scalar_string(const Scalar& x);

// Canonical monomial key: space-joined "u^p" and per-variable "<name>^e"
// factors with explicit exponents; "1" for the constant key. With ns == 1 the
// variable is named by s_name alone; with ns > 1 it is s_name + index (1-based).
std::string monomial_key(const SeriesKey& key, int ns, const std::string& s_name);

// Window descriptor, e.g. "u [0,10); s <= 6" ("exact" for untruncated parts).
std::string window_string(const Series& f);

// (key, value) pairs in canonical order: u ascending, then lexicographic
// s-exponents. Zero coefficients are skipped.
std::vector<std::pair<std::string, std::string>> series_entries(const Series& f);

struct ResultBlock {
    std::string label;
    std::vector<std::pair<std::string, std::string>> entries;
};

// Everything a CLI invocation emits: the command echo, the surface and
// truncation-window descriptors, exact results, and suite verdicts.
struct OutputDocument {
    std::string command;
    std::string surface;
    std::string window;
    std::vector<ResultBlock> results;
    std::vector<CheckResult> verdicts;
};

ResultBlock scalar_block(const std::string& label, const Scalar& x);
ResultBlock series_block(const std::string& label, const Series& f);

// Deterministic renderings: identical documents yield byte-identical text.
std::string to_json(const OutputDocument& doc);
std::string to_csv(const OutputDocument& doc);
std::string to_text(const OutputDocument& doc);

// Inverse of to_json / to_csv on their own output (exact string round-trip).
OutputDocument from_json(const std::string& text);
OutputDocument from_csv(const std::string& text);

} // namespace gwkit

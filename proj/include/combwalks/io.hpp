// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "combwalks/identities.hpp"
#include "combwalks/polynomial.hpp"
#include "combwalks/rational.hpp"
#include "combwalks/sum_engine.hpp"

namespace combwalks {

using Json = nlohmann::ordered_json;

// Provenance block embedded verbatim in every output document. wall_ms is
// the only volatile field; determinism checks strip it before comparing.
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> params;
    std::optional<std::uint64_t> seed;
    std::string version = "combwalks 0.1.0";
    std::vector<std::string> notes;
    double wall_ms = 0.0;
};

// Column-oriented scan output; cells are JSON scalars (string for exact
// rationals, number for floats/ints, bool, or null for guarded cells).
struct ScanTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Json>> rows;

    void add_row(std::vector<Json> cells);
};

std::string float_repr(double x);  // 17 significant digits, locale-free

Json to_json(const Rational& r);
Json to_json(const SparsePolynomial& p);
Json to_json(const mpz_class& z);  // number when it fits 64 bits, else string
Json to_json(const SumResult& r);
Json to_json(const IdentityReport& rep);
Json to_json(const RunManifest& m);
Json to_json(const Walk& w);       // integer array
Json to_json(const WalkClass& c);  // {n, direction, steps, sign_filter, kappa?, truncation?}

SparsePolynomial polynomial_from_json(const Json& j);

enum class OutputFormat { json, csv, text };
OutputFormat parse_format(const std::string& name);

std::string render_table(const RunManifest& m, const ScanTable& t, OutputFormat f);
std::string render_reports(const RunManifest& m, const std::vector<IdentityReport>& reps,
                           OutputFormat f);
// extras: named values appended to the result document (e.g. last-layer
// increment, empty-class notes)
std::string render_result(const RunManifest& m, const SumResult& r,
                          const std::vector<std::pair<std::string, Json>>& extras,
                          OutputFormat f);

// Writes to the path, or stdout when path is empty.
void emit(const std::string& path, const std::string& content);

}  // namespace combwalks

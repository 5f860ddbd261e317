#pragma once

#include "relstate/rational.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace relstate::report {

enum class Status { match, mismatch, flagged, na };

const char* to_string(Status s);

struct ReportRow {
    std::string case_name;
    std::optional<int> N, M, d;
    std::string exact;  // "p/q" in lowest terms
    double value = 0.0;
    std::optional<double> paper_value;
    Status status = Status::na;
};

/// Rounds to 3 significant decimal digits (the table's print precision),
/// e.g. 0.0557395 -> "0.0557".
std::string format_sig3(double v);

/// True when v agrees with the printed 3-significant-figure value to half
/// a unit in its last printed digit.
bool matches_printed_3sig(double v, double printed);

/// Builds a row comparing an exact value against an optional printed one.
ReportRow make_row(std::string case_name, const BigRational& exact,
                   std::optional<double> paper_value);

using Json = nlohmann::ordered_json;

/// Canonical serialization: keys in insertion order, no whitespace, floats
/// rendered with up to 17 significant digits and always carrying a '.' or
/// exponent. Parsing the output and re-dumping it is byte-identical.
std::string dump_canonical(const Json& j);

Json to_json(const ReportRow& row);

/// RFC-4180-style line with the fixed header `case,N,M,exact,float,paper,status`.
std::string csv_header();
std::string csv_line(const ReportRow& row);
std::string csv_escape(const std::string& field);

/// Human-oriented fixed-width line.
std::string human_line(const ReportRow& row);

}  // namespace relstate::report

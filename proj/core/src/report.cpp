#include "relstate/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace relstate::report {

const char* to_string(Status s) {
    switch (s) {
        case Status::match: return "match";
        case Status::mismatch: return "mismatch";
        case Status::flagged: return "flagged";
        case Status::na: return "n/a";
    }
    return "n/a";
}

std::string format_sig3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

bool matches_printed_3sig(double v, double printed) {
    if (printed == 0.0) return std::abs(v) < 5e-4;
    const double scale = std::pow(10.0, std::floor(std::log10(std::abs(printed))) - 2);
    // half a unit in the last printed digit, padded by float slack
    return std::abs(v - printed) <= 0.5 * scale * (1 + 1e-9);
}

ReportRow make_row(std::string case_name, const BigRational& exact,
                   std::optional<double> paper_value) {
    ReportRow row;
    row.case_name = std::move(case_name);
    row.exact = to_fraction_string(exact);
    row.value = to_double(exact);
    row.paper_value = paper_value;
    if (paper_value) {
        row.status = matches_printed_3sig(row.value, *paper_value) ? Status::match : Status::mismatch;
    } else {
        row.status = Status::na;
    }
    return row;
}

namespace {

std::string format_json_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    std::string s = buf;
    // keep the token a float so parse + re-dump is stable
    if (s.find_first_of(".eE") == std::string::npos && s.find("inf") == std::string::npos &&
        s.find("nan") == std::string::npos) {
        s += ".0";
    }
    return s;
}

void escape_json_string(const std::string& s, std::string& out) {
    out += '"';
    for (const char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void dump_rec(const Json& j, std::string& out) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                escape_json_string(key, out);
                out += ':';
                dump_rec(value, out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i != 0) out += ',';
                dump_rec(j[i], out);
            }
            out += ']';
            break;
        }
        case Json::value_t::string:
            escape_json_string(j.get_ref<const std::string&>(), out);
            break;
        case Json::value_t::number_float:
            out += format_json_double(j.get<double>());
            break;
        case Json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            break;
        case Json::value_t::null:
            out += "null";
            break;
        default:
            out += j.dump();  // integers
    }
}

}  // namespace

std::string dump_canonical(const Json& j) {
    std::string out;
    dump_rec(j, out);
    return out;
}

Json to_json(const ReportRow& row) {
    Json j;
    j["case"] = row.case_name;
    if (row.N) j["N"] = *row.N;
    if (row.M) j["M"] = *row.M;
    if (row.d) j["d"] = *row.d;
    j["exact"] = row.exact;
    j["float"] = row.value;
    if (row.paper_value) j["paper"] = *row.paper_value;
    j["status"] = to_string(row.status);
    return j;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (const char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_header() { return "case,N,M,exact,float,paper,status"; }

std::string csv_line(const ReportRow& row) {
    std::ostringstream os;
    os << csv_escape(row.case_name) << ',';
    if (row.N) os << *row.N;
    os << ',';
    if (row.M) os << *row.M;
    os << ',';
    os << csv_escape(row.exact) << ',' << format_sig3(row.value) << ',';
    if (row.paper_value) os << format_sig3(*row.paper_value);
    os << ',' << to_string(row.status);
    return os.str();
}

std::string human_line(const ReportRow& row) {
    std::ostringstream os;
    os << row.case_name;
    os << "  exact=" << row.exact << "  float=" << format_sig3(row.value);
    if (row.paper_value) os << "  paper=" << format_sig3(*row.paper_value);
    os << "  [" << to_string(row.status) << "]";
    return os.str();
}

}  // namespace relstate::report

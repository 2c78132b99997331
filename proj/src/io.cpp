// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

#include "hyperwalk/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include "hyperwalk/error.hpp"
#include "hyperwalk/unitary.hpp"

namespace hyperwalk {

std::string format_probability(double p) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", p);
    return buf;
}

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

Json to_json(const ModeOccupation& occ) { return Json(std::vector<int>(occ.counts().begin(), occ.counts().end())); }

Json to_json(const SymmetrySet& p) { return Json(p.segmentations()); }

Json to_json(const VerifyReport& report) {
    Json sets = Json::array();
    for (const auto& p : report.symmetry_sets) sets.push_back(to_json(p));
    Json j;
    j["initial"] = to_json(report.initial);
    j["statistics"] = to_string(report.statistics);
    j["eta"] = report.eta;
    j["symmetry_sets"] = sets;
    j["law_applicable"] = report.law_applicable;
    j["predicted_suppressed_count"] = report.predicted_suppressed_count;
    j["total_finals"] = report.total_finals;
    j["max_predicted_probability"] = report.max_predicted_probability;
    j["worst_state"] = report.worst_state ? to_json(*report.worst_state) : Json(nullptr);
    j["violation_count"] = report.violation_count;
    j["tolerance"] = report.tolerance;
    j["pass"] = report.pass;
    j["extra_zero_count"] = report.extra_zero_count;
    j["probability_sum"] = report.probability_sum;
    return j;
}

Json to_json(const RatioReport& report) {
    Json j;
    j["statistics"] = to_string(report.statistics);
    j["eta"] = report.eta;
    j["exact_suppressed"] = report.exact_suppressed;
    j["exact_total"] = report.exact_total;
    j["exact_ratio"] = report.exact_ratio;
    j["approx_ratio"] = report.approx ? Json(report.approx->value) : Json(nullptr);
    j["approx_large_n_limit"] =
        (report.approx && report.approx->large_n_limit) ? Json(*report.approx->large_n_limit) : Json(nullptr);
    return j;
}

ModeOccupation occupation_from_json(const Json& j) {
    if (!j.is_array()) throw InvalidArgument("occupation must be a JSON array of integers");
    return ModeOccupation(j.get<std::vector<int>>());
}

Json matrix_to_json(const ComplexMatrix& u, int m, std::optional<int> d) {
    Json re = Json::array();
    Json im = Json::array();
    for (std::size_t r = 0; r < u.rows(); ++r) {
        Json re_row = Json::array();
        Json im_row = Json::array();
        for (const Complex& z : u.row(r)) {
            re_row.push_back(z.real());
            im_row.push_back(z.imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    Json j;
    if (d) j["d"] = *d;
    j["m"] = m;
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

ComplexMatrix subunitary_from_json(const Json& j) {
    try {
        const int m = j.at("m").get<int>();
        const auto re = j.at("re").get<std::vector<std::vector<double>>>();
        const auto im = j.at("im").get<std::vector<std::vector<double>>>();
        if (m < 1) throw InvalidArgument("matrix size m must be >= 1");
        const auto size = static_cast<std::size_t>(m);
        if (re.size() != size || im.size() != size) throw InvalidArgument("matrix must have m rows in re and im");
        ComplexMatrix a(size, size);
        for (std::size_t r = 0; r < size; ++r) {
            if (re[r].size() != size || im[r].size() != size) throw InvalidArgument("matrix rows must have m entries");
            for (std::size_t c = 0; c < size; ++c) a(r, c) = Complex{re[r][c], im[r][c]};
        }
        const double residual = unitarity_residual(a);
        if (!(residual < kSubunitaryTolerance)) {
            throw InvalidArgument("matrix is not unitary: ||A^dag A - I||_max = " + format_probability(residual));
        }
        return a;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed matrix JSON: ") + e.what());
    }
}

ComplexMatrix load_subunitary(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(path + ": " + e.what());
    }
    return subunitary_from_json(j);
}

Format parse_format(const std::string& text) {
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    throw InvalidArgument("unknown format \"" + text + "\" (expected csv or json)");
}

RecordWriter::RecordWriter(std::ostream& out, Format format, bool with_prediction, Json header)
    : out_(out), format_(format), with_prediction_(with_prediction) {
    if (format_ == Format::Csv) {
        for (const auto& [key, value] : header.items()) {
            out_ << "# " << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
        }
        out_ << "final_state,probability";
        if (with_prediction_) out_ << ",suppressed_predicted,classification_set";
        out_ << '\n';
        return;
    }
    out_ << "{\n";
    for (const auto& [key, value] : header.items()) out_ << "  " << Json(key).dump() << ": " << value.dump() << ",\n";
    out_ << "  \"records\": [";
}

RecordWriter::~RecordWriter() {
    try {
        finish();
    } catch (...) {
    }
}

void RecordWriter::write(const ModeOccupation& final_state, std::optional<double> probability,
                         const PredictionRecord* prediction) {
    if (format_ == Format::Csv) {
        out_ << csv_field(format_occupation(final_state)) << ',' << (probability ? format_probability(*probability) : "");
        if (with_prediction_) {
            const bool suppressed = prediction && prediction->any_suppressed;
            out_ << ',' << (suppressed ? "true" : "false") << ','
                 << csv_field(prediction ? prediction->classification_label() : "unsuppressed");
        }
        out_ << '\n';
        return;
    }
    out_ << (first_ ? "\n    " : ",\n    ");
    first_ = false;
    // probabilities go through format_probability so CSV and JSON agree digit for digit
    out_ << "{\"final_state\": " << to_json(final_state).dump()
         << ", \"probability\": " << (probability ? format_probability(*probability) : "null");
    if (with_prediction_) {
        const bool suppressed = prediction && prediction->any_suppressed;
        out_ << ", \"suppressed_predicted\": " << (suppressed ? "true" : "false") << ", \"classification_set\": "
             << ((prediction && prediction->classification) ? to_json(*prediction->classification).dump()
                                                             : std::string("\"unsuppressed\""));
    }
    out_ << '}';
}

void RecordWriter::finish() {
    if (finished_) return;
    finished_ = true;
    if (format_ == Format::Json) out_ << (first_ ? "]\n}\n" : "\n  ]\n}\n");
    out_.flush();
}

}  // namespace hyperwalk

// Copyright 2026 The Hyperwalk Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief File schemas: matrix JSON, distribution/prediction CSV and JSON,
 *        verification and ratio reports.
 *
 * Matrix schema: {"m": int, "re": [[...]], "im": [[...]]} row-major, with an
 * extra "d" for exported hypercube unitaries. Probabilities are printed with
 * 17 significant digits in the C locale so files round-trip bit-exactly.
 */

#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "hyperwalk/fock.hpp"
#include "hyperwalk/matrix.hpp"
#include "hyperwalk/supplaw.hpp"
#include "hyperwalk/symmetry.hpp"

namespace hyperwalk {

using Json = nlohmann::ordered_json;

/// "%.17g", locale independent.
std::string format_probability(double p);

/// Wraps in double quotes when the value contains a comma or quote.
std::string csv_field(const std::string& value);

Json to_json(const ModeOccupation& occ);
Json to_json(const SymmetrySet& p);
Json to_json(const VerifyReport& report);
Json to_json(const RatioReport& report);

ModeOccupation occupation_from_json(const Json& j);

/// Writes {"m", "re", "im"} and, when given, {"d"}.
Json matrix_to_json(const ComplexMatrix& u, int m, std::optional<int> d = std::nullopt);

/// Parses the matrix schema and checks unitarity to kSubunitaryTolerance.
/// Throws InvalidArgument with the residual on failure.
ComplexMatrix subunitary_from_json(const Json& j);

ComplexMatrix load_subunitary(const std::string& path);

enum class Format { Csv, Json };

Format parse_format(const std::string& text);

/**
 * Streams final-state records. CSV columns are
 *   final_state,probability[,suppressed_predicted,classification_set]
 * preceded by "# key=value" header lines; the JSON mirror is a single object
 * holding the header fields and a "records" array.
 */
class RecordWriter {
public:
    RecordWriter(std::ostream& out, Format format, bool with_prediction, Json header);
    ~RecordWriter();

    RecordWriter(const RecordWriter&) = delete;
    RecordWriter& operator=(const RecordWriter&) = delete;

    /// `probability` may be empty in prediction-only output.
    void write(const ModeOccupation& final_state, std::optional<double> probability,
               const PredictionRecord* prediction = nullptr);

    /// Closes the JSON document; called by the destructor if omitted.
    void finish();

private:
    std::ostream& out_;
    Format format_;
    bool with_prediction_;
    bool first_ = true;
    bool finished_ = false;
};

}  // namespace hyperwalk

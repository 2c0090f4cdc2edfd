#pragma once

#include <string>

#include "genfer/eval.hpp"

namespace genfer {

std::string report_to_json(const EvalReport& report);

// Aligned confusion-matrix table: predicted rows, true columns, a precision
// column and a recall row, with the overall accuracy underneath.
std::string report_to_text(const EvalReport& report);

}  // namespace genfer

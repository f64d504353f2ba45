#pragma once

#include <optional>
#include <string>

namespace tdho {

// 17 significant digits, '.' separator; round-trips every double.
std::string csv_number(double v);
// Empty field when absent.
std::string csv_number(const std::optional<double>& v);

}  // namespace tdho

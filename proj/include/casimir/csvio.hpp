#ifndef CASIMIR_CSVIO_HPP
#define CASIMIR_CSVIO_HPP

#include <optional>
#include <string>
#include <vector>

namespace casimir::csvio {

// Locale-independent scientific formatting with 17 significant digits;
// byte-stable across runs.
std::string format_sci(double v);

// Locale-independent parse; returns nullopt on malformed input.
std::optional<double> parse_double(const std::string& s);

std::vector<std::string> split(const std::string& line, char sep = ',');

}  // namespace casimir::csvio

#endif

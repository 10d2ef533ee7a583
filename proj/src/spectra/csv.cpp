#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "wgmsense/errors.hpp"
#include "wgmsense/spectra.hpp"

namespace wgmsense {

namespace {

constexpr const char* kSpectrumHeader = "detuning_gamma,value";

double parse_double(std::string_view text, std::size_t line) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw InvalidArgument("malformed number '" + std::string(text) + "' on line " +
                              std::to_string(line));
    return v;
}

}  // namespace

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void write_spectrum_csv(std::ostream& os, const Spectrum& spec) {
    os << kSpectrumHeader << '\n';
    for (std::size_t i = 0; i < spec.size(); ++i)
        os << format_number(spec.detunings[i]) << ',' << format_number(spec.values[i]) << '\n';
}

void write_spectrum_csv(const std::string& path, const Spectrum& spec) {
    std::ofstream os(path);
    if (!os) throw ComputationError("cannot open '" + path + "' for writing");
    write_spectrum_csv(os, spec);
    if (!os) throw ComputationError("failed writing '" + path + "'");
}

SpectrumTable read_spectrum_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != kSpectrumHeader)
        throw InvalidArgument(std::string("spectrum CSV must start with header '") +
                              kSpectrumHeader + "'");
    SpectrumTable table;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
            throw InvalidArgument("expected two columns on line " + std::to_string(lineno));
        const std::string_view view{line};
        table.detunings.push_back(parse_double(view.substr(0, comma), lineno));
        table.values.push_back(parse_double(view.substr(comma + 1), lineno));
    }
    return table;
}

}  // namespace wgmsense

#include "modmin/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace modmin {

Complex parse_complex_pair(const std::string& text) {
    std::istringstream in(text);
    double re = 0.0, im = 0.0;
    if (!(in >> re >> im))
        throw std::invalid_argument("expected \"re im\" pair, got: " + text);
    std::string rest;
    if (in >> rest)
        throw std::invalid_argument("trailing tokens after pair: " + text);
    return {re, im};
}

Polynomial read_coeff_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient file: " + path);
    std::vector<Complex> coeffs;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        coeffs.push_back(parse_complex_pair(line));
    }
    if (coeffs.empty())
        throw std::runtime_error("no coefficients in file: " + path);
    return Polynomial(std::move(coeffs));
}

Polynomial parse_inline_poly(const std::string& text) {
    std::vector<Complex> coeffs;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, ','))
        coeffs.push_back(parse_complex_pair(part));
    if (coeffs.empty())
        throw std::invalid_argument("empty polynomial string");
    return Polynomial(std::move(coeffs));
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string trace_record_line(const TraceRecord& rec) {
    std::string s = "{\"iter\":" + std::to_string(rec.iter);
    s += ",\"re\":" + fmt_double(rec.z.real());
    s += ",\"im\":" + fmt_double(rec.z.imag());
    s += ",\"abs_p\":" + fmt_double(rec.abs_p);
    s += ",\"F\":" + fmt_double(rec.F);
    s += ",\"k\":" + std::to_string(rec.k);
    s += ",\"theta\":" + fmt_double(rec.theta);
    s += ",\"alpha\":" + fmt_double(rec.alpha);
    s += ",\"backtracks\":" + std::to_string(rec.backtracks);
    s += "}";
    return s;
}

void write_trace_jsonl(std::ostream& os, const SolverTrace& trace) {
    for (const TraceRecord& rec : trace) os << trace_record_line(rec) << '\n';
}

void write_ppm(std::ostream& os, int width, int height,
               const std::vector<unsigned char>& rgb) {
    if (rgb.size() != static_cast<size_t>(width) * height * 3)
        throw std::invalid_argument("write_ppm: pixel buffer size mismatch");
    os << "P6\n" << width << ' ' << height << "\n255\n";
    os.write(reinterpret_cast<const char*>(rgb.data()),
             static_cast<std::streamsize>(rgb.size()));
}

} // namespace modmin

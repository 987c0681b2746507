#ifndef MODMIN_IO_HPP
#define MODMIN_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "modmin/complex_poly.hpp"
#include "modmin/solver.hpp"

namespace modmin {

/// Parse one "re im" pair (two decimal floats, whitespace separated).
Complex parse_complex_pair(const std::string& text);

/// Coefficient file: one "re im" per line, ascending powers, '#' comments.
Polynomial read_coeff_file(const std::string& path);

/// Inline form: comma-separated "re im" pairs, ascending powers.
Polynomial parse_inline_poly(const std::string& text);

/// One trace record as a flat JSON object, keys iter, re, im, abs_p, F, k,
/// theta, alpha, backtracks. Deterministic formatting (%.17g).
std::string trace_record_line(const TraceRecord& rec);

void write_trace_jsonl(std::ostream& os, const SolverTrace& trace);

/// Binary PPM: "P6\n<w> <h>\n255\n" followed by 3*w*h bytes row-major.
void write_ppm(std::ostream& os, int width, int height,
               const std::vector<unsigned char>& rgb);

} // namespace modmin

#endif

#pragma once

#include <iosfwd>
#include <string>

#include "dirseq/geometry.hpp"
#include "dirseq/sequence.hpp"

namespace dirseq {

// Halfperiod text format: a header line `N=<int> H=<int>` followed by H+1
// lines of N space-separated signed labels (negative = conjugate).  Blank
// lines and `#` comments are ignored; whitespace is free-form.
std::string write_halfperiod(const HalfPeriod& seq);
HalfPeriod read_halfperiod(std::istream& in);
HalfPeriod parse_halfperiod(const std::string& text);

// Configuration text format:
//   D = <int>
//   points = <int>
//   a_num a_den b_num b_den  a_num a_den b_num b_den   (x then y per line)
// Each coordinate is a_num/a_den + (b_num/b_den)*sqrt(D), in lowest terms.
// Round-trips bit-exactly.
std::string write_configuration(const Configuration& cfg);
Configuration read_configuration(std::istream& in);
Configuration parse_configuration(const std::string& text);

// Static SVG 1.1 rendering: one circle per point, connecting lines grouped
// and colored by direction class.  Exact coordinates are evaluated to 6
// decimal digits for display only.  Deterministic for identical input.
std::string render_svg(const Configuration& cfg);

}  // namespace dirseq

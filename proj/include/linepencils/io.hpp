#pragma once

// Text and structured-object serialization of line combinatorics.
//
// Text format (UTF-8):
//   lines: <n>
//   point: i1 i2 ... ik        (k >= 3, 1-based, strictly increasing)
// Blank lines and '#' comments are ignored.  The structured form is a JSON
// object {"lines": n, "points": [[...], ...]}.

#include <iosfwd>
#include <string>

#include "linepencils/combinatorics.hpp"
#include "linepencils/matrix.hpp"

namespace linepencils {

LineCombinatorics parse_combinatorics(const std::string& text, const std::string& source = "<input>");
LineCombinatorics load_combinatorics(const std::string& path);

std::string serialize_text(const LineCombinatorics& c);
std::string serialize_structured(const LineCombinatorics& c);

// whitespace-separated integer grid, one row per line
IntMat parse_int_matrix(const std::string& text, const std::string& source = "<matrix>");
IntMat load_int_matrix(const std::string& path);

std::string read_file(const std::string& path);

// small stable content hash (fnv-1a over the canonical text form)
std::string input_hash(const LineCombinatorics& c);

}  // namespace linepencils

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spectra/spectral.hpp"

namespace spectra {

// Parses a family description of the form
//   {"dimension": N, "A": [[..],..], "B": [[..],..], "symmetric_hint": bool}
// where A and B are N x N row-major matrices and symmetric_hint is optional
// (default false). Throws ParseError on malformed JSON or shape mismatches.
MatrixFamily read_family_json(const std::string& text);

// Reads and parses a family file; throws ParseError if the file cannot be
// opened.
MatrixFamily read_family_file(const std::string& path);

// Serializes a family in the format read_family_json accepts.
std::string family_to_json(const MatrixFamily& fam);

// Serializes confluence events as a JSON array of
//   {"lambda_star": .., "pair": [low, high], "value": ..}
// objects, in the given order.
std::string events_to_json(const std::vector<ConfluenceEvent>& events);

// Writes tracked paths as CSV with header "lambda,path_id,re,im", path-major
// (all samples of path 1, then path 2, ...). lambda uses fixed 9 decimals;
// re and im use %.12g.
void write_paths_csv(std::ostream& out, const std::vector<EigenPath>& paths);

}  // namespace spectra

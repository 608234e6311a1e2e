#pragma once

#include "hly/algebra.hpp"
#include "hly/deformation.hpp"
#include "hly/representation.hpp"

#include <string>

namespace hly {

/// JSON codecs for the on-disk formats (documented in docs/file-formats.md).
/// Scalars travel as canonical fraction strings; sparse entries are written
/// in sorted index order and rejected as duplicates on load. Malformed JSON
/// or wrong shapes raise ParseError; well-formed documents violating a type
/// invariant raise ValidationError.

HomLYSA algebra_from_json(const std::string& text);
std::string algebra_to_json(const HomLYSA& a, const std::string& name = "",
                            const std::string& description = "");

RepTriple rep_from_json(const HomLYSA& a, const std::string& text);
std::string rep_to_json(const RepTriple& r);

Deformation deformation_from_json(const HomLYSA& base,
                                  const std::string& text);
std::string deformation_to_json(const Deformation& d);

FormalIso iso_from_json(const HomLYSA& base, const std::string& text);
std::string iso_to_json(const FormalIso& iso);

/// File wrappers; missing or unreadable paths raise IoError.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

HomLYSA load_algebra(const std::string& path);
RepTriple load_rep(const HomLYSA& a, const std::string& path);
Deformation load_deformation(const HomLYSA& base, const std::string& path);
FormalIso load_iso(const HomLYSA& base, const std::string& path);

}  // namespace hly

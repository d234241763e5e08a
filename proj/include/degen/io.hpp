#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "degen/algebra.hpp"
#include "degen/deformation.hpp"
#include "degen/degeneration.hpp"

namespace degen {

/// JSON documents; see docs/FORMATS.md. Parse failures raise Error{parse}
/// with "source:line:col" for syntax errors and the offending field path
/// otherwise.
Algebra parse_algebra(std::string_view text, const std::string& source = "<input>");
Algebra load_algebra(const std::string& path);
std::string serialize_algebra(const Algebra& A);

DeformationFamily parse_deformation(std::string_view text, const std::string& source = "<input>");
DeformationFamily load_deformation(const std::string& path);
std::string serialize_deformation(const DeformationFamily& D);

struct WitnessFile {
  Witness witness;
  /// algebra paths, resolved against the witness file's directory
  std::optional<std::string> from;
  std::optional<std::string> to;
};

WitnessFile parse_witness(std::string_view text, const std::string& source = "<input>",
                          const std::string& base_dir = "");
WitnessFile load_witness(const std::string& path);
std::string serialize_witness(const Witness& w, const std::optional<std::string>& from = std::nullopt,
                              const std::optional<std::string>& to = std::nullopt);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace degen

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jframe/frame.hpp"
#include "jframe/krein.hpp"
#include "jframe/numerics.hpp"

namespace jframe::io {

/// Input document: a space given either by signature or by an explicit
/// J matrix, plus the family vectors. Labels and reference values are
/// optional; any reference value present is compared against the
/// computed quantity of the same name during analysis.
struct FrameDocument {
  std::optional<std::pair<std::size_t, std::size_t>> signature;
  std::optional<num::Matrix> j;
  std::vector<KVector> vectors;
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, double>> reference_values;
};

/// Analysis report mirroring the library verdicts. Member indices are
/// 1-based in documents, matching the CLI flags.
struct AnalysisDocument {
  std::optional<std::pair<std::size_t, std::size_t>> signature;
  std::vector<std::size_t> i_plus;
  std::vector<std::size_t> i_minus;
  std::optional<double> zeta;
  std::optional<double> gamma_plus;
  std::optional<double> gamma_minus;
  std::optional<std::pair<double, double>> bound_plus;
  std::optional<std::pair<double, double>> bound_minus;
  std::vector<double> spectrum_plus;
  std::vector<double> spectrum_minus;
  bool j_frame = false;
  bool tight = false;
  bool parseval = false;
  bool onb = false;
  bool weakly_normalized = false;
  bool normalized = false;
  bool disjoint = false;
  bool strictly_disjoint = false;
  std::optional<double> a_plus;
  std::optional<double> a_minus;
  double fp_j = 0.0;
  double floor = 0.0;
  double gap = 0.0;
  std::vector<std::string> discrepancy_notes;
};

/// Shortest exact decimal of a double (17 significant digits).
std::string format_number(double v);

/// Parse the JSON text of a FrameDocument. Malformed JSON raises a
/// parse_error; structural problems raise validation errors with the
/// offending path in the message.
FrameDocument parse_frame_document(const std::string& text);

/// Build the space described by the document (signature or explicit J).
KreinSpace space_from_document(const FrameDocument& doc,
                               const num::Tolerances& tol = {});

/// Parse, validate, and partition in one step.
std::pair<KreinSpace, FrameFamily> read_frame_document(
    const std::string& text, const num::Tolerances& tol = {});

/// Serialize a family document; numbers round-trip exactly.
std::string write_frame_document(
    const KreinSpace& space, const std::vector<KVector>& vectors,
    const std::vector<std::string>& labels = {},
    const std::vector<std::pair<std::string, double>>& reference_values = {});

/// Run every verdict over the family and compare any reference values
/// carried by the document.
AnalysisDocument build_analysis(const KreinSpace& space, const FrameFamily& f,
                                const FrameDocument& doc,
                                const num::Tolerances& tol = {});

std::string to_json(const AnalysisDocument& doc);
std::string to_text(const AnalysisDocument& doc);

/// Command line entry point; arguments exclude the program name.
/// Reports go to `out`, diagnostics to `err`. Exit status: 0 success,
/// 1 validation failure, 2 numerical failure or non-convergence.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

/// Write the bundled example documents and the discrepancy ledger into
/// `dir`; returns the created paths. Output is byte-identical per build.
std::vector<std::filesystem::path> emit_regression_corpus(
    const std::filesystem::path& dir);

}  // namespace jframe::io

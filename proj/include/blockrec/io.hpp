#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blockrec/model.hpp"
#include "blockrec/scores.hpp"

namespace blockrec {

/// Shortest round-trip decimal for a finite double; "inf"/"-inf" for
/// infinities. Locale-independent, so emitted bytes are reproducible.
std::string fmt_double(double x);

/// Parses fmt_double output (also accepts standard strtod forms).
double parse_double(const std::string& s);

/// Observation text format: header "BLOCKREC-OBS v1 n=<n> kind=<ros|sbm>",
/// then n rows of n space-separated values.
std::string observation_to_text(const Observation& obs);
Observation observation_from_text(const std::string& text);

/// Labels (and side-information y vectors): one line of space-separated
/// 1 / -1 / 0 entries.
std::string labels_to_text(const std::vector<std::int8_t>& labels);
std::vector<std::int8_t> labels_from_text(const std::string& text);

/// Scores: one decimal per line, with "inf"/"-inf" literals.
std::string scores_to_text(const ScoreVector& z);
ScoreVector scores_from_text(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace blockrec

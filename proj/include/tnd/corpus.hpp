// File: include/tnd/corpus.hpp
//
// Sentence-per-line corpus ingestion and the fixed train/eval split.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tnd {

struct CorpusSplit {
  std::vector<std::string> train;
  std::vector<std::string> eval;
};

// Trims edges, collapses internal whitespace runs to single spaces.
std::string normalize_line(const std::string& line);

// Reads, normalizes, drops empty lines. Throws ConfigError when nothing
// usable remains.
std::vector<std::string> load_corpus(const std::string& path);

// Deterministic shuffle with `seed`, then the first (1-eval_fraction)
// goes to train. Both halves are non-empty for any sane corpus.
CorpusSplit split_corpus(const std::vector<std::string>& lines,
                         double eval_fraction, std::uint64_t seed);

}  // namespace tnd

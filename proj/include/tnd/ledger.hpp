// File: include/tnd/ledger.hpp
//
// Frequency ledger: cumulative counts of tracked words by learning
// source. Training appends one event per scored text to ledger.jsonl;
// the analysis replays events and samples cumulative counts on the
// checkpoint grid.
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "tnd/error.hpp"

namespace tnd {

enum class LedgerSource { kTrial = 0, kDemo = 1, kCorpus = 2 };
inline constexpr int kLedgerSources = 3;

std::string to_string(LedgerSource source);
LedgerSource ledger_source_from_string(const std::string& name);

struct LedgerEvent {
  std::int64_t step = 0;
  LedgerSource source = LedgerSource::kCorpus;
  std::map<std::string, int> hits;  // tracked word -> occurrences, nonzero
};

std::string ledger_event_to_json_line(const LedgerEvent& event);
LedgerEvent ledger_event_from_json_line(const std::string& line);
std::vector<LedgerEvent> load_ledger_events(const std::filesystem::path& path);

// Lowercased words of `text`, split on whitespace, surrounding
// punctuation stripped. The matching rule shared by the ledger and the
// word-level evaluation.
std::vector<std::string> match_words(const std::string& text);

class FrequencyLedger {
 public:
  explicit FrequencyLedger(std::vector<std::string> tracked_words);

  const std::vector<std::string>& tracked() const { return tracked_; }
  std::int64_t current_step() const { return current_step_; }

  // Counts tracked-word occurrences in `text` and folds them into the
  // cumulative table. Steps must be nondecreasing. Returns the event
  // (possibly with empty hits) for logging.
  LedgerEvent record(LedgerSource source, const std::string& text,
                     std::int64_t step);

  // Folds an already-counted event (replay path).
  void apply(const LedgerEvent& event);

  // Cumulative count so far for one (word, source) cell.
  long count(const std::string& word, LedgerSource source) const;

 private:
  std::vector<std::string> tracked_;
  std::map<std::string, std::array<long, kLedgerSources>> counts_;
  std::int64_t current_step_ = 0;
};

// Cumulative counts per (word, source) sampled at each grid step, in
// grid order. Events must be step-sorted (as written during a run).
struct LedgerSeries {
  std::vector<std::int64_t> grid;
  std::vector<std::string> words;
  // counts[word][source][grid index]
  std::map<std::string, std::array<std::vector<double>, kLedgerSources>>
      counts;
};
LedgerSeries ledger_series(const std::vector<LedgerEvent>& events,
                           const std::vector<std::string>& tracked,
                           const std::vector<std::int64_t>& grid);

// Partition of the tracked list by part-of-speech category; unmapped
// words land in "other".
std::map<std::string, std::vector<std::string>> group_words(
    const std::vector<std::string>& words,
    const std::map<std::string, std::string>& pos_map);

}  // namespace tnd

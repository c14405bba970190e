// File: include/tnd/bpe.hpp
//
// Byte-pair-encoding tokenizer trained on the experiment corpus. Merges are
// learned within whitespace-delimited words; the space character is its own
// token, so decode(encode(line)) == line for any line over the training
// alphabet. Specials ride on top of `target_vocab`, which counts text
// tokens (base alphabet + merges) only.
#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tnd/error.hpp"

namespace tnd {

class Vocabulary {
 public:
  static constexpr int kBos = 0;
  static constexpr int kEos = 1;
  static constexpr int kUnk = 2;

  int size() const { return static_cast<int>(tokens_.size()); }
  const std::string& token(int id) const;
  int id_of(const std::string& token) const;  // -1 when absent
  const std::vector<std::pair<std::string, std::string>>& merges() const {
    return merges_;
  }
  bool is_special(int id) const { return id >= 0 && id <= kUnk; }

  std::vector<int> encode(std::string_view line) const;
  // Concatenates token strings; special ids are skipped.
  std::string decode(const std::vector<int>& ids) const;

  void save(const std::string& path) const;
  static Vocabulary load(const std::string& path);

  friend Vocabulary train_bpe(const std::vector<std::string>& corpus,
                              int target_vocab);

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> token_ids_;
  std::vector<std::pair<std::string, std::string>> merges_;
  std::unordered_map<std::string, int> merge_rank_;  // "a\x1fb" -> rank

  void add_token(const std::string& tok);
  void index_merges();
  std::vector<int> encode_word(std::string_view word) const;
};

// Greedy highest-count pair merging until `target_vocab` text tokens exist
// (or no adjacent pair is left). Pair counts are taken within words; ties
// break toward the lexicographically smaller (left, right) pair, so the
// result is a pure function of the corpus.
Vocabulary train_bpe(const std::vector<std::string>& corpus, int target_vocab);

}  // namespace tnd

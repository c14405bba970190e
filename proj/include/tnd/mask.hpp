// File: include/tnd/mask.hpp
//
// Word-level decode masking. Masked words must be single tokens under
// the shared vocabulary (rejected at load otherwise) and their token ids
// are vetoed outright. A masked word could still be spelled from smaller
// pieces, so a second veto works at word boundaries: a candidate that
// would close the current word is rejected when that word is masked.
#pragma once

#include <set>
#include <string>
#include <vector>

#include "tnd/bpe.hpp"

namespace tnd {

class MaskSet {
 public:
  MaskSet(const Vocabulary& vocab, std::vector<std::string> words);

  const std::vector<std::string>& words() const { return words_; }
  const std::set<int>& token_ids() const { return token_ids_; }

  // Per-sequence scan state. Feed every accepted token (prompt included)
  // through emit(); query vetoes() for candidates before accepting them.
  void reset() { buffer_.clear(); }
  void emit(int token);

  // `final_slot` marks the last position of a length-capped generation,
  // where the word also closes without a delimiter.
  bool vetoes(int candidate, bool final_slot) const;

  // Whole-word scan used as the independent check on finished text.
  bool contains_masked_word(const std::string& text) const;

 private:
  const Vocabulary* vocab_;
  std::vector<std::string> words_;
  std::set<std::string> word_set_;
  std::set<int> token_ids_;
  std::string buffer_;  // current partial word
};

}  // namespace tnd

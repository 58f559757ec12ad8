#pragma once

#include "accentmask/errors.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace accentmask {

struct EditCounts {
  int substitutions = 0;
  int insertions = 0;
  int deletions = 0;

  int total() const { return substitutions + insertions + deletions; }
};

/// Minimal-cost alignment with unit costs, computed with two rolling DP
/// rows (O(min) memory, any length). Ties prefer substitutions over
/// insertion+deletion pairs, which makes the (S, I, D) split unique.
template <typename Token>
EditCounts edit_distance(std::span<const Token> ref, std::span<const Token> hyp) {
  struct Cell {
    int cost, s, i, d;
    // lexicographic (cost asc, substitutions desc)
    bool better_than(const Cell& o) const {
      return cost != o.cost ? cost < o.cost : s > o.s;
    }
  };
  const size_t nr = ref.size(), nh = hyp.size();
  std::vector<Cell> prev(nh + 1), cur(nh + 1);
  for (size_t j = 0; j <= nh; ++j) prev[j] = {static_cast<int>(j), 0, static_cast<int>(j), 0};
  for (size_t i = 1; i <= nr; ++i) {
    cur[0] = {static_cast<int>(i), 0, 0, static_cast<int>(i)};
    for (size_t j = 1; j <= nh; ++j) {
      Cell best = prev[j - 1];
      if (ref[i - 1] == hyp[j - 1]) {
        // match: no cost
      } else {
        best.cost += 1;
        best.s += 1;
      }
      Cell del = prev[j];
      del.cost += 1;
      del.d += 1;
      if (del.better_than(best)) best = del;
      Cell ins = cur[j - 1];
      ins.cost += 1;
      ins.i += 1;
      if (ins.better_than(best)) best = ins;
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  const Cell& out = prev[nh];
  return EditCounts{out.s, out.i, out.d};
}

enum class Lang { kEn, kFa };

/// Versioned text normalization (see kNormalizationVersion): lowercase for
/// English, punctuation stripped (documented ASCII + Arabic-script set),
/// whitespace collapsed. For Persian additionally: Arabic Yeh/Kaf folded to
/// their Persian codepoints, Tatweel and Arabic diacritics removed, and
/// zero-width non-joiner turned into a regular space. Idempotent.
std::string normalize_text(std::string_view text, Lang lang);

/// Scores are only comparable between corpora normalized with the same
/// version of normalize_text.
inline constexpr int kNormalizationVersion = 1;

std::vector<std::string> tokenize_words(std::string_view normalized_text);

/// Codepoints of the normalized string with inter-word whitespace removed
/// (the CER token sequence).
std::u32string cer_tokens(std::string_view normalized_text);

/// Per-utterance alignment counts at word and character granularity.
struct ScoredPair {
  std::string id;
  int ref_words = 0;
  int ref_chars = 0;
  EditCounts words;
  EditCounts chars;
};

struct CorpusScore {
  double wer = 0.0;  // percent; micro-averaged, may exceed 100
  double cer = 0.0;  // percent
  std::int64_t ref_words = 0;
  std::int64_t ref_chars = 0;
  std::int64_t word_edits = 0;
  std::int64_t char_edits = 0;
  std::vector<ScoredPair> per_utterance;
};

struct Utterance {
  std::string id;
  std::string text;
};

/// Pair refs and hyps by id and micro-average: WER = 100 * sum(edits) /
/// sum(ref words), likewise CER over characters. Throws ValidationError
/// listing unpaired ids, and ArgumentError when the reference corpus has no
/// tokens (undefined rate).
CorpusScore score_corpus(std::span<const Utterance> refs,
                         std::span<const Utterance> hyps, Lang lang);

// UTF-8 helpers (invalid sequences decode to U+FFFD).
std::u32string utf8_decode(std::string_view s);
std::string utf8_encode(std::u32string_view s);

}  // namespace accentmask

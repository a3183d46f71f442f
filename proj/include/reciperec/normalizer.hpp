#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "reciperec/vectors.hpp"

namespace reciperec::normalizer {

struct QuantityLexicon {
  std::string language;
  std::unordered_set<std::string> tokens;  // no purely numeric tokens, <= top_k

  bool contains(const std::string& token) const { return tokens.count(token) > 0; }
};

// Top-k most frequent non-numeric whitespace tokens across quantity fields.
QuantityLexicon mine_quantity_tokens(const std::vector<std::string>& quantity_fields,
                                     const std::string& language, std::size_t top_k = 200);

struct DictionaryEntry {
  std::string name;                 // cleaned ingredient string
  std::vector<std::string> tokens;  // its tokens, cached
  std::int64_t count = 0;
};

struct IngredientDictionary {
  std::string language;
  std::vector<DictionaryEntry> entries;  // counts non-increasing
};

// Frequency-ranked ingredient strings containing neither punctuation nor a
// quantity-lexicon token, truncated to top_k.
IngredientDictionary build_dictionary(const std::vector<std::string>& ingredient_lines,
                                      const QuantityLexicon& lexicon, std::size_t top_k = 1500);

void save_lexicon(const std::string& path, const QuantityLexicon& lexicon);
QuantityLexicon load_lexicon(const std::string& path, const std::string& language);
void save_dictionary(const std::string& path, const IngredientDictionary& dict);
IngredientDictionary load_dictionary(const std::string& path, const std::string& language);

struct NormalizationResult {
  std::optional<std::string> canonical;
  std::set<std::string> matched_tokens;  // dictionary-entry tokens that matched
  int score = 0;                         // common-token-subset size
  bool fuzzy_used = false;
};

// Maps a raw ingredient string to the dictionary entry sharing the largest
// common token subset; a raw token matches an entry token when equal or when
// the cosine similarity of their vectors clears the threshold. Ties break
// towards the more frequent, then shorter, entry.
NormalizationResult normalize_ingredient(std::string_view raw, const IngredientDictionary& dict,
                                         const VectorProvider& vectors,
                                         double cosine_threshold = 0.75);

}  // namespace reciperec::normalizer

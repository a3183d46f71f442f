#include "reciperec/normalizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "reciperec/io.hpp"
#include "reciperec/text.hpp"

namespace reciperec::normalizer {

QuantityLexicon mine_quantity_tokens(const std::vector<std::string>& quantity_fields,
                                     const std::string& language, std::size_t top_k) {
  if (quantity_fields.empty()) throw std::invalid_argument("no quantity fields to mine");
  std::unordered_map<std::string, std::int64_t> counts;
  for (const std::string& field : quantity_fields) {
    for (const std::string& tok : text::tokenize(field)) {
      if (text::numeric_token(tok)) continue;
      ++counts[tok];
    }
  }
  std::vector<std::pair<std::string, std::int64_t>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (ranked.size() > top_k) ranked.resize(top_k);

  QuantityLexicon lex;
  lex.language = language;
  for (const auto& [tok, c] : ranked) lex.tokens.insert(tok);
  return lex;
}

namespace {

bool has_punctuation(const std::string& s) {
  for (std::uint32_t cp : text::decode_utf8(s))
    if (text::is_punct(cp)) return true;
  return false;
}

// canonical key for counting: lowercase, collapsed single spaces
std::string canonical_line(const std::string& raw) {
  std::vector<std::string> toks;
  // keep punctuation intact here; only whitespace-normalise and lowercase
  std::string lowered = text::lower(raw);
  std::string cur;
  std::vector<std::uint32_t> cps = text::decode_utf8(lowered);
  for (std::uint32_t cp : cps) {
    if (text::is_space(cp)) {
      if (!cur.empty()) {
        toks.push_back(cur);
        cur.clear();
      }
    } else {
      text::append_utf8(cur, cp);
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i) out.push_back(' ');
    out += toks[i];
  }
  return out;
}

}  // namespace

IngredientDictionary build_dictionary(const std::vector<std::string>& ingredient_lines,
                                      const QuantityLexicon& lexicon, std::size_t top_k) {
  std::unordered_map<std::string, std::int64_t> counts;
  for (const std::string& raw : ingredient_lines) {
    std::string key = canonical_line(raw);
    if (key.empty()) continue;
    if (has_punctuation(key)) continue;
    // quantity present = a lexicon token or a numeric token anywhere
    bool has_quantity = false;
    std::vector<std::string> toks = text::tokenize(key);
    for (const std::string& t : toks) {
      if (lexicon.contains(t) || text::numeric_token(t)) {
        has_quantity = true;
        break;
      }
    }
    if (has_quantity || toks.empty()) continue;
    ++counts[key];
  }

  std::vector<std::pair<std::string, std::int64_t>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  if (ranked.size() > top_k) ranked.resize(top_k);

  IngredientDictionary dict;
  dict.language = lexicon.language;
  for (const auto& [name, c] : ranked) {
    DictionaryEntry e;
    e.name = name;
    e.tokens = text::tokenize(name);
    e.count = c;
    dict.entries.push_back(std::move(e));
  }
  return dict;
}

void save_lexicon(const std::string& path, const QuantityLexicon& lexicon) {
  std::vector<std::string> tokens(lexicon.tokens.begin(), lexicon.tokens.end());
  std::sort(tokens.begin(), tokens.end());
  std::vector<std::vector<std::string>> rows;
  for (const std::string& t : tokens) rows.push_back({t});
  io::write_tsv(path, rows);
}

QuantityLexicon load_lexicon(const std::string& path, const std::string& language) {
  QuantityLexicon lex;
  lex.language = language;
  for (const auto& row : io::read_tsv(path))
    if (!row.empty() && !row[0].empty()) lex.tokens.insert(row[0]);
  return lex;
}

void save_dictionary(const std::string& path, const IngredientDictionary& dict) {
  std::vector<std::vector<std::string>> rows;
  for (const DictionaryEntry& e : dict.entries)
    rows.push_back({e.name, std::to_string(e.count)});
  io::write_tsv(path, rows);
}

IngredientDictionary load_dictionary(const std::string& path, const std::string& language) {
  IngredientDictionary dict;
  dict.language = language;
  std::int64_t prev = -1;
  for (const auto& row : io::read_tsv(path)) {
    if (row.size() < 2) throw std::runtime_error("bad dictionary row in " + path);
    DictionaryEntry e;
    e.name = row[0];
    e.tokens = text::tokenize(e.name);
    e.count = std::stoll(row[1]);
    if (prev >= 0 && e.count > prev)
      throw std::runtime_error("dictionary counts not non-increasing in " + path);
    prev = e.count;
    dict.entries.push_back(std::move(e));
  }
  return dict;
}

NormalizationResult normalize_ingredient(std::string_view raw, const IngredientDictionary& dict,
                                         const VectorProvider& vectors, double cosine_threshold) {
  if (dict.entries.empty()) throw std::invalid_argument("dictionary is empty");
  std::vector<std::string> raw_tokens = text::tokenize(raw);

  std::unordered_set<std::string> raw_set(raw_tokens.begin(), raw_tokens.end());
  std::vector<Eigen::VectorXd> raw_vecs;
  raw_vecs.reserve(raw_tokens.size());
  for (const std::string& t : raw_tokens) raw_vecs.push_back(vectors.vector_of(t));
  std::vector<double> raw_norms;
  for (const auto& v : raw_vecs) raw_norms.push_back(v.norm());

  NormalizationResult best;
  const DictionaryEntry* best_entry = nullptr;

  for (const DictionaryEntry& entry : dict.entries) {
    if (static_cast<int>(entry.tokens.size()) < best.score) continue;  // cannot win
    std::set<std::string> matched;
    bool fuzzy = false;
    for (const std::string& et : entry.tokens) {
      if (raw_set.count(et)) {
        matched.insert(et);
        continue;
      }
      Eigen::VectorXd ev = vectors.vector_of(et);
      double en = ev.norm();
      if (en == 0.0) continue;
      for (std::size_t i = 0; i < raw_tokens.size(); ++i) {
        if (raw_norms[i] == 0.0) continue;
        double cos = ev.dot(raw_vecs[i]) / (en * raw_norms[i]);
        if (cos >= cosine_threshold) {
          matched.insert(et);
          fuzzy = true;
          break;
        }
      }
    }
    int score = static_cast<int>(matched.size());
    if (score == 0) continue;

    bool better = false;
    if (score > best.score) {
      better = true;
    } else if (score == best.score && best_entry) {
      if (entry.count > best_entry->count) {
        better = true;
      } else if (entry.count == best_entry->count &&
                 entry.name.size() < best_entry->name.size()) {
        better = true;
      }
    }
    if (better) {
      best.canonical = entry.name;
      best.matched_tokens = std::move(matched);
      best.score = score;
      best.fuzzy_used = fuzzy;
      best_entry = &entry;
    }
  }
  return best;
}

}  // namespace reciperec::normalizer

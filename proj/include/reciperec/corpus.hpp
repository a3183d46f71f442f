#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "reciperec/sparse.hpp"

namespace reciperec::corpus {

inline const std::vector<std::string>& supported_languages() {
  static const std::vector<std::string> langs = {"ar", "en", "id", "ru", "es"};
  return langs;
}

struct IngredientLine {
  std::string raw_text;
  std::string quantity_text;
};

struct Recipe {
  std::string id;
  std::string language;
  std::string title;
  std::vector<IngredientLine> ingredient_lines;
  std::vector<std::string> steps;
  std::optional<std::string> image_ref;
  int step_image_count = 0;
  std::optional<int> cook_minutes;
  std::optional<int> portions;
  std::string author_id;
  std::optional<std::string> author_country;
  std::int64_t published_at = 0;  // epoch seconds, UTC
};

struct InteractionEvent {
  std::string user_id;
  std::string recipe_id;
  std::string event_type;
  std::int64_t occurred_at = 0;
  double weight = 0.0;  // assigned by weight_events, not read from input
};

struct SearchImpression {
  std::string user_id;
  std::string query;
  std::int64_t occurred_at = 0;
  std::vector<std::string> served;   // duplicate-free
  std::vector<std::string> clicked;  // subset of served
};

struct LoadStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

// Line-delimited JSON loaders. A malformed or invariant-violating line is
// skipped and counted; an unreadable file throws.
std::vector<Recipe> load_recipes(const std::string& path, LoadStats* stats = nullptr);
std::vector<InteractionEvent> load_events(const std::string& path, LoadStats* stats = nullptr);
std::vector<SearchImpression> load_impressions(const std::string& path, LoadStats* stats = nullptr);

void save_recipes(const std::string& path, const std::vector<Recipe>& recipes);
void save_events(const std::string& path, const std::vector<InteractionEvent>& events);
void save_impressions(const std::string& path, const std::vector<SearchImpression>& impressions);

using WeightMap = std::map<std::string, double>;

// Assigns weight_map[type] to each event; zero-weight events are dropped.
// An event type missing from the map throws, naming the type.
std::vector<InteractionEvent> weight_events(std::vector<InteractionEvent> events,
                                            const WeightMap& weight_map);

// Appends one weighted event per (user, clicked recipe) pair; duplicates are
// allowed and accumulate later in the interaction matrix.
std::vector<InteractionEvent> fuse_search_clicks(std::vector<InteractionEvent> events,
                                                 const std::vector<SearchImpression>& impressions,
                                                 double click_weight);

struct TemporalSplit {
  std::vector<InteractionEvent> profile;     // before t1
  std::vector<InteractionEvent> train;       // [t1, t2)
  std::vector<InteractionEvent> validation;  // [t2, t3)
  std::vector<InteractionEvent> test;        // >= t3
  std::int64_t t1 = 0, t2 = 0, t3 = 0;
};

TemporalSplit temporal_split(const std::vector<InteractionEvent>& events, std::int64_t t1,
                             std::int64_t t2, std::int64_t t3);

// Bidirectional id <-> dense index map.
struct IndexMap {
  std::vector<std::string> ids;
  std::unordered_map<std::string, int> index;

  static IndexMap from_ids(std::vector<std::string> sorted_unique_ids);
  int at(const std::string& id) const;  // throws when missing
  int find(const std::string& id) const {  // -1 when missing
    auto it = index.find(id);
    return it == index.end() ? -1 : it->second;
  }
  std::size_t size() const { return ids.size(); }
};

IndexMap collect_users(const std::vector<InteractionEvent>& events);
IndexMap collect_recipes(const std::vector<Recipe>& recipes);

struct InteractionMatrix {
  SparseMatrix values;  // users x recipes, summed event weights
  IndexMap users;
  IndexMap items;
};

InteractionMatrix build_interaction_matrix(const std::vector<InteractionEvent>& events,
                                           const IndexMap& users, const IndexMap& items);

}  // namespace reciperec::corpus

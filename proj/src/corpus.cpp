#include "reciperec/corpus.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <stdexcept>

#include "reciperec/io.hpp"

namespace reciperec::corpus {

using nlohmann::json;

namespace {

bool valid_language(const std::string& lang) {
  const auto& langs = supported_languages();
  return std::find(langs.begin(), langs.end(), lang) != langs.end();
}

Recipe parse_recipe(const json& j) {
  Recipe r;
  r.id = j.at("id").get<std::string>();
  r.language = j.at("language").get<std::string>();
  r.title = j.at("title").get<std::string>();
  for (const json& line : j.at("ingredient_lines")) {
    IngredientLine il;
    il.raw_text = line.at("raw_text").get<std::string>();
    il.quantity_text = line.value("quantity_text", std::string());
    r.ingredient_lines.push_back(std::move(il));
  }
  r.steps = j.at("steps").get<std::vector<std::string>>();
  if (j.contains("image_ref") && !j["image_ref"].is_null())
    r.image_ref = j["image_ref"].get<std::string>();
  r.step_image_count = j.value("step_image_count", 0);
  if (j.contains("cook_minutes") && !j["cook_minutes"].is_null())
    r.cook_minutes = j["cook_minutes"].get<int>();
  if (j.contains("portions") && !j["portions"].is_null()) r.portions = j["portions"].get<int>();
  r.author_id = j.at("author_id").get<std::string>();
  if (j.contains("author_country") && !j["author_country"].is_null())
    r.author_country = j["author_country"].get<std::string>();
  r.published_at = io::parse_rfc3339(j.at("published_at").get<std::string>());
  return r;
}

bool recipe_valid(const Recipe& r) {
  if (r.id.empty() || r.title.empty()) return false;
  if (!valid_language(r.language)) return false;
  if (r.ingredient_lines.empty() || r.steps.empty()) return false;
  if (r.step_image_count < 0) return false;
  if (r.cook_minutes && *r.cook_minutes <= 0) return false;
  if (r.portions && *r.portions <= 0) return false;
  for (const auto& s : r.steps)
    if (s.empty()) return false;
  return true;
}

json recipe_to_json(const Recipe& r) {
  json j;
  j["id"] = r.id;
  j["language"] = r.language;
  j["title"] = r.title;
  json lines = json::array();
  for (const auto& il : r.ingredient_lines)
    lines.push_back({{"raw_text", il.raw_text}, {"quantity_text", il.quantity_text}});
  j["ingredient_lines"] = std::move(lines);
  j["steps"] = r.steps;
  if (r.image_ref) j["image_ref"] = *r.image_ref;
  j["step_image_count"] = r.step_image_count;
  if (r.cook_minutes) j["cook_minutes"] = *r.cook_minutes;
  if (r.portions) j["portions"] = *r.portions;
  j["author_id"] = r.author_id;
  if (r.author_country) j["author_country"] = *r.author_country;
  j["published_at"] = io::format_rfc3339(r.published_at);
  return j;
}

}  // namespace

std::vector<Recipe> load_recipes(const std::string& path, LoadStats* stats) {
  std::vector<Recipe> out;
  LoadStats local;
  for (const std::string& line : io::read_lines(path)) {
    if (line.empty()) continue;
    try {
      Recipe r = parse_recipe(json::parse(line));
      if (!recipe_valid(r)) {
        ++local.rejected;
        continue;
      }
      out.push_back(std::move(r));
      ++local.accepted;
    } catch (const std::exception&) {
      ++local.rejected;
    }
  }
  if (stats) *stats = local;
  return out;
}

std::vector<InteractionEvent> load_events(const std::string& path, LoadStats* stats) {
  std::vector<InteractionEvent> out;
  LoadStats local;
  for (const std::string& line : io::read_lines(path)) {
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      InteractionEvent e;
      e.user_id = j.at("user_id").get<std::string>();
      e.recipe_id = j.at("recipe_id").get<std::string>();
      e.event_type = j.at("event_type").get<std::string>();
      e.occurred_at = io::parse_rfc3339(j.at("occurred_at").get<std::string>());
      if (e.user_id.empty() || e.recipe_id.empty() || e.event_type.empty()) {
        ++local.rejected;
        continue;
      }
      out.push_back(std::move(e));
      ++local.accepted;
    } catch (const std::exception&) {
      ++local.rejected;
    }
  }
  if (stats) *stats = local;
  return out;
}

std::vector<SearchImpression> load_impressions(const std::string& path, LoadStats* stats) {
  std::vector<SearchImpression> out;
  LoadStats local;
  for (const std::string& line : io::read_lines(path)) {
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      SearchImpression imp;
      imp.user_id = j.at("user_id").get<std::string>();
      imp.query = j.at("query").get<std::string>();
      imp.occurred_at = io::parse_rfc3339(j.at("occurred_at").get<std::string>());
      imp.served = j.at("served").get<std::vector<std::string>>();
      imp.clicked = j.at("clicked").get<std::vector<std::string>>();
      std::set<std::string> served_set(imp.served.begin(), imp.served.end());
      if (served_set.size() != imp.served.size()) {  // duplicates in served
        ++local.rejected;
        continue;
      }
      bool clicked_ok = true;
      for (const auto& c : imp.clicked)
        if (!served_set.count(c)) {
          clicked_ok = false;
          break;
        }
      if (!clicked_ok || imp.user_id.empty()) {
        ++local.rejected;
        continue;
      }
      out.push_back(std::move(imp));
      ++local.accepted;
    } catch (const std::exception&) {
      ++local.rejected;
    }
  }
  if (stats) *stats = local;
  return out;
}

void save_recipes(const std::string& path, const std::vector<Recipe>& recipes) {
  std::vector<std::string> lines;
  lines.reserve(recipes.size());
  for (const Recipe& r : recipes) lines.push_back(recipe_to_json(r).dump());
  io::write_lines(path, lines);
}

void save_events(const std::string& path, const std::vector<InteractionEvent>& events) {
  std::vector<std::string> lines;
  lines.reserve(events.size());
  for (const InteractionEvent& e : events) {
    json j;
    j["user_id"] = e.user_id;
    j["recipe_id"] = e.recipe_id;
    j["event_type"] = e.event_type;
    j["occurred_at"] = io::format_rfc3339(e.occurred_at);
    lines.push_back(j.dump());
  }
  io::write_lines(path, lines);
}

void save_impressions(const std::string& path, const std::vector<SearchImpression>& impressions) {
  std::vector<std::string> lines;
  lines.reserve(impressions.size());
  for (const SearchImpression& imp : impressions) {
    json j;
    j["user_id"] = imp.user_id;
    j["query"] = imp.query;
    j["occurred_at"] = io::format_rfc3339(imp.occurred_at);
    j["served"] = imp.served;
    j["clicked"] = imp.clicked;
    lines.push_back(j.dump());
  }
  io::write_lines(path, lines);
}

std::vector<InteractionEvent> weight_events(std::vector<InteractionEvent> events,
                                            const WeightMap& weight_map) {
  for (const auto& [type, w] : weight_map)
    if (w < 0.0) throw std::invalid_argument("negative weight for event type: " + type);
  std::vector<InteractionEvent> out;
  out.reserve(events.size());
  for (InteractionEvent& e : events) {
    auto it = weight_map.find(e.event_type);
    if (it == weight_map.end())
      throw std::runtime_error("event type not in weight map: " + e.event_type);
    if (it->second == 0.0) continue;
    e.weight = it->second;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<InteractionEvent> fuse_search_clicks(std::vector<InteractionEvent> events,
                                                 const std::vector<SearchImpression>& impressions,
                                                 double click_weight) {
  for (const SearchImpression& imp : impressions) {
    for (const std::string& recipe : imp.clicked) {
      InteractionEvent e;
      e.user_id = imp.user_id;
      e.recipe_id = recipe;
      e.event_type = "search_click";
      e.occurred_at = imp.occurred_at;
      e.weight = click_weight;
      events.push_back(std::move(e));
    }
  }
  return events;
}

TemporalSplit temporal_split(const std::vector<InteractionEvent>& events, std::int64_t t1,
                             std::int64_t t2, std::int64_t t3) {
  if (!(t1 < t2 && t2 < t3))
    throw std::invalid_argument("temporal split boundaries must satisfy t1 < t2 < t3");
  TemporalSplit split;
  split.t1 = t1;
  split.t2 = t2;
  split.t3 = t3;
  for (const InteractionEvent& e : events) {
    if (e.occurred_at < t1)
      split.profile.push_back(e);
    else if (e.occurred_at < t2)
      split.train.push_back(e);
    else if (e.occurred_at < t3)
      split.validation.push_back(e);
    else
      split.test.push_back(e);
  }
  return split;
}

IndexMap IndexMap::from_ids(std::vector<std::string> sorted_unique_ids) {
  IndexMap m;
  m.ids = std::move(sorted_unique_ids);
  m.index.reserve(m.ids.size());
  for (std::size_t i = 0; i < m.ids.size(); ++i) m.index[m.ids[i]] = static_cast<int>(i);
  if (m.index.size() != m.ids.size()) throw std::invalid_argument("IndexMap: duplicate ids");
  return m;
}

int IndexMap::at(const std::string& id) const {
  auto it = index.find(id);
  if (it == index.end()) throw std::out_of_range("id not in index: " + id);
  return it->second;
}

IndexMap collect_users(const std::vector<InteractionEvent>& events) {
  std::vector<std::string> ids;
  ids.reserve(events.size());
  for (const auto& e : events) ids.push_back(e.user_id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return IndexMap::from_ids(std::move(ids));
}

IndexMap collect_recipes(const std::vector<Recipe>& recipes) {
  std::vector<std::string> ids;
  ids.reserve(recipes.size());
  for (const auto& r : recipes) ids.push_back(r.id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return IndexMap::from_ids(std::move(ids));
}

InteractionMatrix build_interaction_matrix(const std::vector<InteractionEvent>& events,
                                           const IndexMap& users, const IndexMap& items) {
  std::vector<SparseMatrix::Triplet> triplets;
  triplets.reserve(events.size());
  for (const InteractionEvent& e : events) {
    int u = users.at(e.user_id);  // throws on unknown id
    int r = items.at(e.recipe_id);
    triplets.push_back({u, r, e.weight});
  }
  InteractionMatrix m;
  m.values = SparseMatrix::from_triplets(static_cast<int>(users.size()),
                                         static_cast<int>(items.size()), std::move(triplets));
  m.users = users;
  m.items = items;
  return m;
}

}  // namespace reciperec::corpus

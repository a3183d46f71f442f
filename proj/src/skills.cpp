#include "reciperec/skills.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "reciperec/io.hpp"
#include "reciperec/text.hpp"

namespace reciperec::skills {

LexiconVerbTagger::LexiconVerbTagger(std::unordered_set<std::string> lexicon,
                                     std::vector<std::string> suffixes)
    : lexicon_(std::move(lexicon)), suffixes_(std::move(suffixes)) {}

LexiconVerbTagger LexiconVerbTagger::from_file(const std::string& path) {
  std::unordered_set<std::string> lexicon;
  std::vector<std::string> suffixes;
  for (const std::string& line : io::read_lines(path)) {
    if (line.empty() || line[0] == '#') continue;
    // lines starting with '-' declare suffix rules, e.g. "-ify"
    if (line[0] == '-' && line.size() > 1)
      suffixes.push_back(text::lower(line.substr(1)));
    else
      lexicon.insert(text::lower(line));
  }
  return LexiconVerbTagger(std::move(lexicon), std::move(suffixes));
}

std::vector<std::string> LexiconVerbTagger::verbs(const std::vector<std::string>& tokens) const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const std::string& t : tokens) {
    bool hit = lexicon_.count(t) > 0;
    if (!hit) {
      for (const std::string& suf : suffixes_) {
        if (t.size() > suf.size() && t.compare(t.size() - suf.size(), suf.size(), suf) == 0) {
          hit = true;
          break;
        }
      }
    }
    if (hit && seen.insert(t).second) out.push_back(t);
  }
  return out;
}

AnnotationVerbTagger AnnotationVerbTagger::from_file(const std::string& path) {
  AnnotationVerbTagger tagger;
  for (const auto& row : io::read_tsv(path)) {
    if (row.size() < 2) continue;
    std::vector<std::string> verbs;
    std::string cur;
    for (char c : row[1]) {
      if (c == ',') {
        if (!cur.empty()) verbs.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) verbs.push_back(cur);
    tagger.by_sentence_[row[0]] = std::move(verbs);
  }
  return tagger;
}

std::vector<std::string> AnnotationVerbTagger::verbs(const std::vector<std::string>& tokens) const {
  std::string key;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) key.push_back(' ');
    key += tokens[i];
  }
  auto it = by_sentence_.find(key);
  if (it == by_sentence_.end()) return {};
  // keep the interface invariant: returned verbs are tokens of the sentence
  std::vector<std::string> out;
  std::unordered_set<std::string> token_set(tokens.begin(), tokens.end());
  for (const std::string& v : it->second)
    if (token_set.count(v)) out.push_back(v);
  return out;
}

namespace {

bool ingredient_in_sentence(const std::vector<std::string>& ingredient_tokens,
                            const std::vector<std::string>& sentence_tokens,
                            int levenshtein_max) {
  for (const std::string& it : ingredient_tokens) {
    for (const std::string& st : sentence_tokens) {
      if (it == st) return true;
      if (st.size() > it.size() && text::contains(st, it)) return true;  // partial match
      if (levenshtein_max > 0 && text::levenshtein(it, st) <= levenshtein_max) return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<SkillPair>> extract_pairs(const corpus::Recipe& recipe,
                                                  const std::vector<std::string>& normalized_ingredients,
                                                  const VerbTagger& tagger, int levenshtein_max) {
  // dedupe canonical forms, keep deterministic order
  std::vector<std::string> ingredients;
  std::set<std::string> seen;
  for (const std::string& ing : normalized_ingredients)
    if (!ing.empty() && seen.insert(ing).second) ingredients.push_back(ing);
  std::vector<std::vector<std::string>> ingredient_tokens;
  ingredient_tokens.reserve(ingredients.size());
  for (const std::string& ing : ingredients) ingredient_tokens.push_back(text::tokenize(ing));

  std::vector<std::vector<SkillPair>> out;
  for (const std::string& step : recipe.steps) {
    for (const std::string& sentence : text::split_sentences(step)) {
      std::vector<std::string> tokens = text::tokenize(sentence);
      if (tokens.empty()) continue;
      std::vector<SkillPair> pairs;
      std::vector<std::string> verbs = tagger.verbs(tokens);
      if (!verbs.empty()) {
        for (std::size_t i = 0; i < ingredients.size(); ++i) {
          if (!ingredient_in_sentence(ingredient_tokens[i], tokens, levenshtein_max)) continue;
          for (const std::string& v : verbs) pairs.push_back({ingredients[i], v});
        }
      }
      out.push_back(std::move(pairs));
    }
  }
  return out;
}

void PairCounts::add_sentence(const std::vector<SkillPair>& pairs) {
  sentences += 1.0;
  std::set<std::string> ings, vbs, pks;
  for (const SkillPair& p : pairs) {
    ings.insert(p.ingredient);
    vbs.insert(p.verb);
    pks.insert(key(p.ingredient, p.verb));
  }
  for (const auto& i : ings) ingredient_sentences[i] += 1.0;
  for (const auto& v : vbs) verb_sentences[v] += 1.0;
  for (const auto& k : pks) pair_sentences[k] += 1.0;
}

PairCounts accumulate_counts(const std::vector<std::vector<SkillPair>>& sentence_pairs) {
  PairCounts counts;
  for (const auto& pairs : sentence_pairs) counts.add_sentence(pairs);
  return counts;
}

namespace {

// one cell's contribution, with round-off clamping and 0 log 0 := 0
double cell_term(double p, double p_row, double p_col) {
  if (p < 0.0) p = 0.0;
  if (p == 0.0 || p_row <= 0.0 || p_col <= 0.0) return 0.0;
  return p * std::log(p / (p_row * p_col));
}

}  // namespace

MIMatrix compute_mi(const PairCounts& counts) {
  double z = 0.0;
  for (const auto& [k, c] : counts.pair_sentences) z += c;
  if (z <= 0.0) throw std::invalid_argument("no ingredient-verb pairs to normalise");

  MIMatrix m;
  {
    std::set<std::string> ing_sorted, verb_sorted;
    for (const auto& [k, c] : counts.pair_sentences) {
      std::size_t tab = k.find('\t');
      ing_sorted.insert(k.substr(0, tab));
      verb_sorted.insert(k.substr(tab + 1));
    }
    m.ingredients.assign(ing_sorted.begin(), ing_sorted.end());
    m.verbs.assign(verb_sorted.begin(), verb_sorted.end());
  }
  for (std::size_t i = 0; i < m.ingredients.size(); ++i)
    m.ingredient_index[m.ingredients[i]] = static_cast<int>(i);
  for (std::size_t v = 0; v < m.verbs.size(); ++v) m.verb_index[m.verbs[v]] = static_cast<int>(v);

  const Eigen::Index ni = static_cast<Eigen::Index>(m.ingredients.size());
  const Eigen::Index nv = static_cast<Eigen::Index>(m.verbs.size());
  m.joint = Eigen::MatrixXd::Zero(ni, nv);
  for (const auto& [k, c] : counts.pair_sentences) {
    std::size_t tab = k.find('\t');
    int i = m.ingredient_index.at(k.substr(0, tab));
    int v = m.verb_index.at(k.substr(tab + 1));
    m.joint(i, v) = c;
  }

  Eigen::MatrixXd p_joint = m.joint / z;
  Eigen::VectorXd p_ing = p_joint.rowwise().sum();   // P(i)
  Eigen::VectorXd p_verb = p_joint.colwise().sum();  // P(v)

  m.mi = Eigen::MatrixXd::Zero(ni, nv);
  for (Eigen::Index i = 0; i < ni; ++i) {
    for (Eigen::Index v = 0; v < nv; ++v) {
      if (m.joint(i, v) <= 0.0) continue;  // only observed pairs get an MI value
      const double p11 = p_joint(i, v);
      const double p10 = p_ing(i) - p11;         // i present, v absent
      const double p01 = p_verb(v) - p11;        // v present, i absent
      const double p00 = 1.0 - p_ing(i) - p_verb(v) + p11;
      const double pr1 = p_ing(i), pr0 = 1.0 - p_ing(i);
      const double pc1 = p_verb(v), pc0 = 1.0 - p_verb(v);
      double mi = cell_term(p11, pr1, pc1) + cell_term(p10, pr1, pc0) +
                  cell_term(p01, pr0, pc1) + cell_term(p00, pr0, pc0);
      m.mi(i, v) = mi < 0.0 ? 0.0 : mi;  // clamp round-off
    }
  }
  return m;
}

ThresholdMatrix compute_threshold(const MIMatrix& m, double alpha) {
  if (alpha < 0.0 || alpha > 1.0) throw std::invalid_argument("alpha must lie in [0, 1]");
  const Eigen::Index ni = m.mi.rows(), nv = m.mi.cols();

  // row expectation: E_{v'~P(v'|i)}[M_{i,v'}] with P(v'|i) = C_IV(i,v') / row sum
  Eigen::VectorXd row_expect = Eigen::VectorXd::Zero(ni);
  for (Eigen::Index i = 0; i < ni; ++i) {
    double row_sum = m.joint.row(i).sum();
    if (row_sum > 0.0) row_expect(i) = (m.joint.row(i).array() * m.mi.row(i).array()).sum() / row_sum;
  }
  Eigen::VectorXd col_expect = Eigen::VectorXd::Zero(nv);
  for (Eigen::Index v = 0; v < nv; ++v) {
    double col_sum = m.joint.col(v).sum();
    if (col_sum > 0.0) col_expect(v) = (m.joint.col(v).array() * m.mi.col(v).array()).sum() / col_sum;
  }

  ThresholdMatrix t;
  t.alpha = alpha;
  t.theta.resize(ni, nv);
  for (Eigen::Index i = 0; i < ni; ++i)
    for (Eigen::Index v = 0; v < nv; ++v)
      t.theta(i, v) = alpha * row_expect(i) + (1.0 - alpha) * col_expect(v);
  return t;
}

SkillSet select_skills(const MIMatrix& m, const ThresholdMatrix& theta) {
  if (m.mi.rows() != theta.theta.rows() || m.mi.cols() != theta.theta.cols())
    throw std::invalid_argument("MI and threshold shapes differ");
  SkillSet skills;
  for (Eigen::Index i = 0; i < m.mi.rows(); ++i) {
    for (Eigen::Index v = 0; v < m.mi.cols(); ++v) {
      if (m.joint(i, v) <= 0.0) continue;
      if (m.mi(i, v) > theta.theta(i, v))
        skills.entries.push_back({m.ingredients[i], m.verbs[v], m.mi(i, v), theta.theta(i, v)});
    }
  }
  std::sort(skills.entries.begin(), skills.entries.end(), [](const auto& a, const auto& b) {
    if (a.mi != b.mi) return a.mi > b.mi;
    if (a.ingredient != b.ingredient) return a.ingredient < b.ingredient;
    return a.verb < b.verb;
  });
  return skills;
}

bool SkillSet::contains(const std::string& ingredient, const std::string& verb) const {
  for (const Entry& e : entries)
    if (e.ingredient == ingredient && e.verb == verb) return true;
  return false;
}

SkillSet filter_stop_verbs(SkillSet skills, const std::unordered_set<std::string>& stop_verbs) {
  skills.entries.erase(std::remove_if(skills.entries.begin(), skills.entries.end(),
                                      [&](const SkillSet::Entry& e) {
                                        return stop_verbs.count(e.verb) > 0;
                                      }),
                       skills.entries.end());
  return skills;
}

void save_skills(const std::string& path, const SkillSet& skills) {
  std::vector<std::vector<std::string>> rows;
  char buf[64];
  for (const SkillSet::Entry& e : skills.entries) {
    std::snprintf(buf, sizeof(buf), "%.17g", e.mi);
    std::string mi = buf;
    std::snprintf(buf, sizeof(buf), "%.17g", e.threshold);
    rows.push_back({e.ingredient, e.verb, mi, buf});
  }
  io::write_tsv(path, rows);
}

SkillSet load_skills(const std::string& path) {
  SkillSet skills;
  for (const auto& row : io::read_tsv(path)) {
    if (row.size() < 4) throw std::runtime_error("bad skill row in " + path);
    skills.entries.push_back({row[0], row[1], std::stod(row[2]), std::stod(row[3])});
  }
  return skills;
}

std::vector<SkillPair> recipe_skills(const corpus::Recipe& recipe,
                                     const std::vector<std::string>& normalized_ingredients,
                                     const VerbTagger& tagger, const SkillSet& skills,
                                     int levenshtein_max) {
  std::unordered_set<std::string> skill_keys;
  for (const SkillSet::Entry& e : skills.entries)
    skill_keys.insert(PairCounts::key(e.ingredient, e.verb));

  std::vector<SkillPair> out;
  std::set<std::string> seen;
  for (const auto& pairs : extract_pairs(recipe, normalized_ingredients, tagger, levenshtein_max)) {
    for (const SkillPair& p : pairs) {
      std::string k = PairCounts::key(p.ingredient, p.verb);
      if (skill_keys.count(k) && seen.insert(k).second) out.push_back(p);
    }
  }
  return out;
}

// --- skill detector -----------------------------------------------------------

namespace {

void add_tokens(std::vector<std::string>& out, const std::string& prefix, const std::string& text_in) {
  for (const std::string& t : text::tokenize(text_in)) out.push_back(prefix + t);
}

std::vector<std::string> recipe_tokens(const corpus::Recipe& r) {
  std::vector<std::string> toks;
  add_tokens(toks, "t:", r.title);
  for (const auto& il : r.ingredient_lines) add_tokens(toks, "i:", il.raw_text);
  for (const auto& s : r.steps) add_tokens(toks, "s:", s);
  return toks;
}

}  // namespace

Eigen::VectorXd SkillDetector::encode(const corpus::Recipe& recipe,
                                      const std::unordered_map<std::string, int>& vocab) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(vocab.size()) + 1);
  for (const std::string& t : recipe_tokens(recipe)) {
    auto it = vocab.find(t);
    if (it != vocab.end()) x(it->second) += 1.0;
  }
  x(x.size() - 1) = 1.0;  // bias column
  return x;
}

double SkillDetector::loss_and_grad(const Eigen::MatrixXd& features, const Eigen::VectorXd& labels,
                                    const Eigen::VectorXd& weights, double l2,
                                    Eigen::VectorXd* grad) {
  const Eigen::Index n = features.rows();
  Eigen::VectorXd logits = features * weights;
  Eigen::VectorXd probs = logits.unaryExpr([](double x) {
    return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
  });
  double loss = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    double p = std::min(std::max(probs(i), 1e-12), 1.0 - 1e-12);
    loss += labels(i) > 0.5 ? -std::log(p) : -std::log(1.0 - p);
  }
  loss /= static_cast<double>(n);
  // L2 penalty excludes the trailing bias weight
  Eigen::VectorXd reg = weights;
  reg(reg.size() - 1) = 0.0;
  loss += 0.5 * l2 * reg.squaredNorm();
  if (grad) {
    *grad = features.transpose() * (probs - labels) / static_cast<double>(n) + l2 * reg;
  }
  return loss;
}

SkillDetector SkillDetector::train(const std::vector<corpus::Recipe>& recipes,
                                   const std::vector<int>& labels, const DetectorOptions& options,
                                   DetectorMetrics* metrics) {
  if (recipes.size() != labels.size() || recipes.empty())
    throw std::invalid_argument("labels and recipes must align and be non-empty");
  bool has_pos = false, has_neg = false;
  for (int y : labels) (y ? has_pos : has_neg) = true;
  if (!has_pos || !has_neg)
    throw std::invalid_argument("skill detector needs both classes present");

  SkillDetector d;
  {
    std::set<std::string> vocab_sorted;
    for (const auto& r : recipes)
      for (const std::string& t : recipe_tokens(r)) vocab_sorted.insert(t);
    int idx = 0;
    for (const std::string& t : vocab_sorted) d.vocab_[t] = idx++;
  }

  const Eigen::Index n = static_cast<Eigen::Index>(recipes.size());
  const Eigen::Index dcols = static_cast<Eigen::Index>(d.vocab_.size()) + 1;
  Eigen::MatrixXd features(n, dcols);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    features.row(i) = encode(recipes[i], d.vocab_).transpose();
    y(i) = labels[i] ? 1.0 : 0.0;
  }

  d.weights_ = Eigen::VectorXd::Zero(dcols);
  Eigen::VectorXd grad(dcols);
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    loss_and_grad(features, y, d.weights_, options.l2, &grad);
    d.weights_ -= options.learning_rate * grad;
  }

  if (metrics) {
    DetectorMetrics m;
    for (Eigen::Index i = 0; i < n; ++i) {
      double p = 1.0 / (1.0 + std::exp(-features.row(i).dot(d.weights_)));
      bool pred = p >= 0.5, truth = y(i) > 0.5;
      if (pred && truth) ++m.true_positives;
      if (pred && !truth) ++m.false_positives;
      if (!pred && truth) ++m.false_negatives;
    }
    int denom_p = m.true_positives + m.false_positives;
    int denom_r = m.true_positives + m.false_negatives;
    m.precision = denom_p ? static_cast<double>(m.true_positives) / denom_p : 0.0;
    m.recall = denom_r ? static_cast<double>(m.true_positives) / denom_r : 0.0;
    *metrics = m;
  }
  return d;
}

double SkillDetector::predict(const corpus::Recipe& recipe) const {
  Eigen::VectorXd x = encode(recipe, vocab_);
  double s = x.dot(weights_);
  return 1.0 / (1.0 + std::exp(-s));
}

}  // namespace reciperec::skills

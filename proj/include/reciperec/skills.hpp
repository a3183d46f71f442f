#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "reciperec/corpus.hpp"

namespace reciperec::skills {

// Pluggable sentence -> verb-set interface. The default implementation is a
// per-language lexicon with optional suffix rules; an annotation-backed
// tagger lets externally produced verb sets be dropped in.
class VerbTagger {
 public:
  virtual ~VerbTagger() = default;
  // tokens: tokenised sentence; result is a subset of those tokens
  virtual std::vector<std::string> verbs(const std::vector<std::string>& tokens) const = 0;
};

class LexiconVerbTagger : public VerbTagger {
 public:
  LexiconVerbTagger(std::unordered_set<std::string> lexicon, std::vector<std::string> suffixes = {});
  static LexiconVerbTagger from_file(const std::string& path);

  std::vector<std::string> verbs(const std::vector<std::string>& tokens) const override;

 private:
  std::unordered_set<std::string> lexicon_;
  std::vector<std::string> suffixes_;
};

// Looks sentences up by their space-joined token string in an annotation
// file of lines `token token ...<TAB>verb,verb`. Unknown sentences yield no
// verbs.
class AnnotationVerbTagger : public VerbTagger {
 public:
  static AnnotationVerbTagger from_file(const std::string& path);
  std::vector<std::string> verbs(const std::vector<std::string>& tokens) const override;

 private:
  std::unordered_map<std::string, std::vector<std::string>> by_sentence_;
};

struct SkillPair {
  std::string ingredient;
  std::string verb;
  bool operator==(const SkillPair& o) const {
    return ingredient == o.ingredient && verb == o.verb;
  }
};

// Cartesian product of detected verbs and matched ingredients, one list per
// step sentence. An ingredient matches when any of its tokens equals a
// sentence token, is a substring of one, or is within the Levenshtein limit.
std::vector<std::vector<SkillPair>> extract_pairs(const corpus::Recipe& recipe,
                                                  const std::vector<std::string>& normalized_ingredients,
                                                  const VerbTagger& tagger,
                                                  int levenshtein_max = 2);

struct PairCounts {
  std::unordered_map<std::string, double> ingredient_sentences;  // C_I
  std::unordered_map<std::string, double> verb_sentences;        // C_V
  std::unordered_map<std::string, double> pair_sentences;        // C_IV, key "i\tv"
  double sentences = 0.0;                                        // S

  static std::string key(const std::string& ingredient, const std::string& verb) {
    return ingredient + '\t' + verb;
  }
  void add_sentence(const std::vector<SkillPair>& pairs);
};

PairCounts accumulate_counts(const std::vector<std::vector<SkillPair>>& sentence_pairs);

struct MIMatrix {
  std::vector<std::string> ingredients;
  std::vector<std::string> verbs;
  std::unordered_map<std::string, int> ingredient_index;
  std::unordered_map<std::string, int> verb_index;
  Eigen::MatrixXd mi;     // |I| x |V|, zero where joint count is zero
  Eigen::MatrixXd joint;  // C_IV as a dense matrix
};

// Binary mutual information per (ingredient, verb). The joint distribution
// is C_IV / sum(C_IV); marginals are joint row/column sums, which keeps all
// four cells of the 2x2 table nonnegative by construction.
MIMatrix compute_mi(const PairCounts& counts);

struct ThresholdMatrix {
  Eigen::MatrixXd theta;
  double alpha = 0.5;
};

// Theta[i,v] = alpha * E_{v'~P(v'|i)} M[i,v'] + (1-alpha) * E_{i'~P(i'|v)} M[i',v]
ThresholdMatrix compute_threshold(const MIMatrix& m, double alpha = 0.5);

struct SkillSet {
  struct Entry {
    std::string ingredient;
    std::string verb;
    double mi = 0.0;
    double threshold = 0.0;
  };
  std::vector<Entry> entries;  // sorted by mi descending

  bool contains(const std::string& ingredient, const std::string& verb) const;
  std::size_t size() const { return entries.size(); }
};

// Strict M > Theta filter; zero-joint pairs are never selected.
SkillSet select_skills(const MIMatrix& m, const ThresholdMatrix& theta);

// Drops entries whose verb is in the stop list (high-frequency verbs like
// generic "add"/"mix" drown out informative pairings).
SkillSet filter_stop_verbs(SkillSet skills, const std::unordered_set<std::string>& stop_verbs);

void save_skills(const std::string& path, const SkillSet& skills);
SkillSet load_skills(const std::string& path);

// Distinct skill-set pairs detected in a recipe's steps.
std::vector<SkillPair> recipe_skills(const corpus::Recipe& recipe,
                                     const std::vector<std::string>& normalized_ingredients,
                                     const VerbTagger& tagger, const SkillSet& skills,
                                     int levenshtein_max = 2);

// --- skill detector ---------------------------------------------------------

struct DetectorOptions {
  double learning_rate = 0.5;
  int epochs = 300;
  double l2 = 1e-4;
  std::uint64_t seed = 1;
};

struct DetectorMetrics {
  double precision = 0.0;
  double recall = 0.0;
  int true_positives = 0;
  int false_positives = 0;
  int false_negatives = 0;
};

// L2-regularised logistic regression over per-field bag-of-words features
// (title / ingredients / steps tokens, field-prefixed).
class SkillDetector {
 public:
  double predict(const corpus::Recipe& recipe) const;  // probability in (0,1)

  static SkillDetector train(const std::vector<corpus::Recipe>& recipes,
                             const std::vector<int>& labels, const DetectorOptions& options,
                             DetectorMetrics* metrics = nullptr);

  // Exposed for gradient verification: mean cross-entropy + L2 penalty and
  // its gradient at the given weights over the encoded dataset.
  static double loss_and_grad(const Eigen::MatrixXd& features, const Eigen::VectorXd& labels,
                              const Eigen::VectorXd& weights, double l2, Eigen::VectorXd* grad);

  static Eigen::VectorXd encode(const corpus::Recipe& recipe,
                                const std::unordered_map<std::string, int>& vocab);

  const std::unordered_map<std::string, int>& vocabulary() const { return vocab_; }
  const Eigen::VectorXd& weights() const { return weights_; }

 private:
  std::unordered_map<std::string, int> vocab_;  // field-prefixed token -> column
  Eigen::VectorXd weights_;                     // last entry is the bias
};

}  // namespace reciperec::skills

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace reciperec::normalizer {

struct SubwordConfig {
  int ngram_min = 3;
  int ngram_max = 6;
  std::uint32_t buckets = 1u << 15;
};

struct VectorTrainOptions {
  int dim = 300;
  int epochs = 5;
  int window = 5;
  int negatives = 5;
  double learning_rate = 0.05;
  int min_count = 1;
  std::uint64_t seed = 1;
  SubwordConfig subword;
};

// Token -> dense vector map with a character n-gram fallback, so lookups
// never fail. A token's vector is the mean of its word vector (when in
// vocabulary) and its n-gram bucket vectors.
class VectorProvider {
 public:
  VectorProvider() = default;

  int dim() const { return static_cast<int>(bucket_vecs_.cols()); }
  const SubwordConfig& subword() const { return subword_; }
  bool known(std::string_view token) const;
  std::size_t vocabulary_size() const { return words_.size(); }

  Eigen::VectorXd vector_of(std::string_view token) const;
  double cosine(std::string_view a, std::string_view b) const;

  // Overwrites or inserts an explicit word vector (used by tests and by
  // hand-curated overrides).
  void set_word_vector(const std::string& token, const Eigen::VectorXd& v);

  void save(const std::string& path) const;
  static VectorProvider load(const std::string& path);

  // Skip-gram with negative sampling over tokenised sentences; subword
  // bucket vectors share the input representation fastText-style.
  static VectorProvider train(const std::vector<std::vector<std::string>>& sentences,
                              const VectorTrainOptions& options);

  // Untrained provider with seeded Gaussian bucket vectors; useful when only
  // morphological similarity matters.
  static VectorProvider random_init(int dim, const SubwordConfig& subword, std::uint64_t seed);

 private:
  SubwordConfig subword_;
  std::vector<std::string> words_;
  std::unordered_map<std::string, int> word_index_;
  Eigen::MatrixXd word_vecs_;    // |vocab| x dim
  Eigen::MatrixXd bucket_vecs_;  // buckets x dim

  std::vector<int> bucket_ids(std::string_view token) const;
  friend class VectorTrainer;
};

// The vector file format doubles as the image-embedding input format: a
// header line `RRVEC <version> <dim> <n_words> <n_buckets> <nmin> <nmax>`,
// then one `token<TAB>v1 v2 ...` row per word and per bucket (buckets are
// named __bucket__<i>).
std::unordered_map<std::string, Eigen::VectorXd> load_vector_rows(const std::string& path,
                                                                  int* dim_out = nullptr);
void save_vector_rows(const std::string& path,
                      const std::vector<std::pair<std::string, Eigen::VectorXd>>& rows);

}  // namespace reciperec::normalizer

#include "reciperec/vectors.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "reciperec/io.hpp"
#include "reciperec/rng.hpp"
#include "reciperec/text.hpp"

namespace reciperec::normalizer {

std::vector<int> VectorProvider::bucket_ids(std::string_view token) const {
  std::vector<int> ids;
  for (const std::string& g : text::char_ngrams(token, subword_.ngram_min, subword_.ngram_max))
    ids.push_back(static_cast<int>(fnv1a64(g) % subword_.buckets));
  return ids;
}

bool VectorProvider::known(std::string_view token) const {
  return word_index_.count(std::string(token)) > 0;
}

Eigen::VectorXd VectorProvider::vector_of(std::string_view token) const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim());
  int parts = 0;
  auto it = word_index_.find(std::string(token));
  if (it != word_index_.end()) {
    v += word_vecs_.row(it->second).transpose();
    ++parts;
  }
  for (int b : bucket_ids(token)) {
    v += bucket_vecs_.row(b).transpose();
    ++parts;
  }
  if (parts > 0) v /= static_cast<double>(parts);
  return v;
}

double VectorProvider::cosine(std::string_view a, std::string_view b) const {
  Eigen::VectorXd va = vector_of(a), vb = vector_of(b);
  double na = va.norm(), nb = vb.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return va.dot(vb) / (na * nb);
}

void VectorProvider::set_word_vector(const std::string& token, const Eigen::VectorXd& v) {
  if (v.size() != dim() && bucket_vecs_.size() > 0)
    throw std::invalid_argument("vector dimension mismatch");
  auto it = word_index_.find(token);
  if (it == word_index_.end()) {
    word_index_[token] = static_cast<int>(words_.size());
    words_.push_back(token);
    word_vecs_.conservativeResize(static_cast<Eigen::Index>(words_.size()), v.size());
    word_vecs_.row(static_cast<Eigen::Index>(words_.size()) - 1) = v.transpose();
  } else {
    word_vecs_.row(it->second) = v.transpose();
  }
}

VectorProvider VectorProvider::random_init(int dim, const SubwordConfig& subword,
                                           std::uint64_t seed) {
  VectorProvider p;
  p.subword_ = subword;
  p.word_vecs_.resize(0, dim);
  p.bucket_vecs_.resize(subword.buckets, dim);
  Rng rng(seed);
  for (Eigen::Index i = 0; i < p.bucket_vecs_.rows(); ++i)
    for (Eigen::Index j = 0; j < dim; ++j) p.bucket_vecs_(i, j) = rng.normal() / std::sqrt(dim);
  return p;
}

namespace {

double fast_sigmoid(double x) {
  if (x > 30.0) return 1.0;
  if (x < -30.0) return 0.0;
  return 1.0 / (1.0 + std::exp(-x));
}

}  // namespace

VectorProvider VectorProvider::train(const std::vector<std::vector<std::string>>& sentences,
                                     const VectorTrainOptions& options) {
  if (sentences.empty()) throw std::invalid_argument("vector training corpus is empty");

  // vocabulary
  std::unordered_map<std::string, std::int64_t> counts;
  std::int64_t total_tokens = 0;
  for (const auto& s : sentences)
    for (const auto& t : s) {
      ++counts[t];
      ++total_tokens;
    }
  VectorProvider p;
  p.subword_ = options.subword;
  {
    std::vector<std::pair<std::string, std::int64_t>> sorted(counts.begin(), counts.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    for (const auto& [w, c] : sorted) {
      if (c < options.min_count) continue;
      p.word_index_[w] = static_cast<int>(p.words_.size());
      p.words_.push_back(w);
    }
  }
  const int vocab = static_cast<int>(p.words_.size());
  if (vocab == 0) throw std::invalid_argument("vector training vocabulary is empty");
  const int dim = options.dim;

  Rng rng(options.seed);
  p.word_vecs_.resize(vocab, dim);
  p.bucket_vecs_.resize(options.subword.buckets, dim);
  for (Eigen::Index i = 0; i < p.word_vecs_.rows(); ++i)
    for (int j = 0; j < dim; ++j) p.word_vecs_(i, j) = rng.uniform(-0.5, 0.5) / dim;
  for (Eigen::Index i = 0; i < p.bucket_vecs_.rows(); ++i)
    for (int j = 0; j < dim; ++j) p.bucket_vecs_(i, j) = rng.uniform(-0.5, 0.5) / dim;
  Eigen::MatrixXd out_vecs = Eigen::MatrixXd::Zero(vocab, dim);

  // unigram^0.75 negative-sampling table
  std::vector<int> neg_table;
  {
    const int table_size = std::max(vocab * 32, 1 << 12);
    std::vector<double> pow_counts(vocab);
    double z = 0.0;
    for (int w = 0; w < vocab; ++w) {
      pow_counts[w] = std::pow(static_cast<double>(counts[p.words_[w]]), 0.75);
      z += pow_counts[w];
    }
    neg_table.reserve(table_size);
    for (int w = 0; w < vocab; ++w) {
      int reps = std::max(1, static_cast<int>(std::lround(pow_counts[w] / z * table_size)));
      for (int k = 0; k < reps; ++k) neg_table.push_back(w);
    }
  }

  // precompute input ids (word + subword buckets) per vocab word
  std::vector<std::vector<int>> subword_ids(vocab);
  for (int w = 0; w < vocab; ++w) subword_ids[w] = p.bucket_ids(p.words_[w]);

  const double lr0 = options.learning_rate;
  std::int64_t processed = 0;
  const std::int64_t planned = std::max<std::int64_t>(1, total_tokens) * options.epochs;

  Eigen::VectorXd hidden(dim), grad_h(dim);
  for (int epoch = 0; epoch < options.epochs; ++epoch) {
    for (const auto& sentence : sentences) {
      std::vector<int> word_ids;
      word_ids.reserve(sentence.size());
      for (const auto& t : sentence) {
        auto it = p.word_index_.find(t);
        if (it != p.word_index_.end()) word_ids.push_back(it->second);
      }
      for (std::size_t pos = 0; pos < word_ids.size(); ++pos) {
        ++processed;
        double lr = lr0 * std::max(0.05, 1.0 - static_cast<double>(processed) / planned);
        const int center = word_ids[pos];

        // input representation: mean of word vector and its subword buckets
        const auto& subs = subword_ids[center];
        const double denom = 1.0 + static_cast<double>(subs.size());
        hidden = p.word_vecs_.row(center).transpose();
        for (int b : subs) hidden += p.bucket_vecs_.row(b).transpose();
        hidden /= denom;

        grad_h.setZero();
        std::size_t lo = pos >= static_cast<std::size_t>(options.window)
                             ? pos - static_cast<std::size_t>(options.window)
                             : 0;
        std::size_t hi = std::min(word_ids.size(), pos + static_cast<std::size_t>(options.window) + 1);
        bool updated = false;
        for (std::size_t c = lo; c < hi; ++c) {
          if (c == pos) continue;
          const int context = word_ids[c];
          for (int k = 0; k <= options.negatives; ++k) {
            int target;
            double label;
            if (k == 0) {
              target = context;
              label = 1.0;
            } else {
              target = neg_table[rng.index(neg_table.size())];
              if (target == context) continue;
              label = 0.0;
            }
            double s = fast_sigmoid(hidden.dot(out_vecs.row(target).transpose()));
            double g = (s - label) * lr;
            grad_h += g * out_vecs.row(target).transpose();
            out_vecs.row(target) -= (g * hidden).transpose();
            updated = true;
          }
        }
        if (updated) {
          Eigen::VectorXd share = grad_h / denom;
          p.word_vecs_.row(center) -= share.transpose();
          for (int b : subs) p.bucket_vecs_.row(b) -= share.transpose();
        }
      }
    }
  }
  return p;
}

void VectorProvider::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write vector file: " + path);
  out << "RRVEC\t1\t" << dim() << '\t' << words_.size() << '\t' << bucket_vecs_.rows() << '\t'
      << subword_.ngram_min << '\t' << subword_.ngram_max << '\n';
  out.precision(17);
  auto write_row = [&](const std::string& name, const Eigen::MatrixXd& m, Eigen::Index r) {
    out << name << '\t';
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(r, j);
    }
    out << '\n';
  };
  for (std::size_t w = 0; w < words_.size(); ++w)
    write_row(words_[w], word_vecs_, static_cast<Eigen::Index>(w));
  for (Eigen::Index b = 0; b < bucket_vecs_.rows(); ++b)
    write_row("__bucket__" + std::to_string(b), bucket_vecs_, b);
  if (!out) throw std::runtime_error("write failed: " + path);
}

VectorProvider VectorProvider::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open vector file: " + path);
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty vector file: " + path);
  std::istringstream hs(header);
  std::string magic;
  int version, dim;
  std::size_t n_words, n_buckets;
  int nmin, nmax;
  hs >> magic >> version >> dim >> n_words >> n_buckets >> nmin >> nmax;
  if (magic != "RRVEC" || version != 1)
    throw std::runtime_error("not a vector file (bad header): " + path);

  VectorProvider p;
  p.subword_.ngram_min = nmin;
  p.subword_.ngram_max = nmax;
  p.subword_.buckets = n_buckets > 0 ? static_cast<std::uint32_t>(n_buckets) : 1u;
  p.word_vecs_.resize(static_cast<Eigen::Index>(n_words), dim);
  p.bucket_vecs_ = Eigen::MatrixXd::Zero(std::max<std::size_t>(n_buckets, 1), dim);

  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw std::runtime_error("bad vector row in " + path);
    std::string token = line.substr(0, tab);
    std::istringstream vs(line.substr(tab + 1));
    if (row < n_words) {
      for (int j = 0; j < dim; ++j)
        if (!(vs >> p.word_vecs_(static_cast<Eigen::Index>(row), j)))
          throw std::runtime_error("short vector row in " + path);
      p.word_index_[token] = static_cast<int>(p.words_.size());
      p.words_.push_back(token);
    } else {
      std::size_t b = row - n_words;
      if (b >= n_buckets) throw std::runtime_error("too many rows in " + path);
      for (int j = 0; j < dim; ++j)
        if (!(vs >> p.bucket_vecs_(static_cast<Eigen::Index>(b), j)))
          throw std::runtime_error("short vector row in " + path);
    }
    ++row;
  }
  if (row != n_words + n_buckets) throw std::runtime_error("row count mismatch in " + path);
  return p;
}

std::unordered_map<std::string, Eigen::VectorXd> load_vector_rows(const std::string& path,
                                                                  int* dim_out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open vector file: " + path);
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("empty vector file: " + path);
  std::istringstream hs(header);
  std::string magic;
  int version, dim;
  std::size_t n_words, n_buckets;
  int nmin, nmax;
  hs >> magic >> version >> dim >> n_words >> n_buckets >> nmin >> nmax;
  if (magic != "RRVEC" || version != 1)
    throw std::runtime_error("not a vector file (bad header): " + path);
  if (dim_out) *dim_out = dim;

  std::unordered_map<std::string, Eigen::VectorXd> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) throw std::runtime_error("bad vector row in " + path);
    std::string token = line.substr(0, tab);
    if (token.rfind("__bucket__", 0) == 0) continue;
    Eigen::VectorXd v(dim);
    std::istringstream vs(line.substr(tab + 1));
    for (int j = 0; j < dim; ++j)
      if (!(vs >> v(j))) throw std::runtime_error("short vector row in " + path);
    rows[token] = std::move(v);
  }
  return rows;
}

void save_vector_rows(const std::string& path,
                      const std::vector<std::pair<std::string, Eigen::VectorXd>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write vector file: " + path);
  int dim = rows.empty() ? 0 : static_cast<int>(rows.front().second.size());
  out << "RRVEC\t1\t" << dim << '\t' << rows.size() << "\t0\t3\t6\n";
  out.precision(17);
  for (const auto& [token, v] : rows) {
    out << token << '\t';
    for (int j = 0; j < dim; ++j) {
      if (j) out << ' ';
      out << v(j);
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace reciperec::normalizer

#include "distilkit/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

#include "distilkit/error.hpp"
#include "distilkit/io.hpp"

namespace distilkit {

namespace {

constexpr std::uint64_t kMeanSalt = 0x6D65616E73ull;   // class mean directions
constexpr std::uint64_t kDataSalt = 0x7265636F72ull;   // per-record draws
constexpr std::uint64_t kSplitSalt = 0x73706C6974ull;  // patient shuffle

Vec64 random_unit(Rng64& rng, std::size_t dim) {
  Vec64 v(dim);
  for (double& x : v) x = rng.normal();
  double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
  for (double& x : v) x /= norm;
  return v;
}

double parse_double_field(const std::string& tok, std::size_t line_no,
                          const std::string& what) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  double val = std::strtod(begin, &end);
  if (end != begin + tok.size() || tok.empty() || !std::isfinite(val)) {
    throw ParseError("line " + std::to_string(line_no) + ": non-numeric " +
                     what + " '" + tok + "'");
  }
  return val;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string split_name(Split s) {
  return s == Split::Train ? "train" : "test";
}

Split parse_split(const std::string& s) {
  if (s == "train") return Split::Train;
  if (s == "test") return Split::Test;
  throw ParseError("unknown split tag '" + s + "'");
}

std::vector<SampleRecord> generate(const DatasetSpec& spec) {
  double prior_sum = std::accumulate(spec.class_priors.begin(),
                                     spec.class_priors.end(), 0.0);
  if (std::abs(prior_sum - 1.0) > 1e-9 ||
      std::any_of(spec.class_priors.begin(), spec.class_priors.end(),
                  [](double p) { return p < 0.0; })) {
    throw ConfigError("class_priors must be non-negative and sum to 1");
  }
  if (spec.feature_dim < 2) throw ConfigError("feature_dim must be >= 2");
  if (spec.n_patients < 1 || spec.cycles_per_patient < 1)
    throw ConfigError("n_patients and cycles_per_patient must be >= 1");
  if (spec.noise_sigma <= 0.0) throw ConfigError("noise_sigma must be > 0");
  if (spec.class_separation < 0.0)
    throw ConfigError("class_separation must be >= 0");

  const std::size_t dim = spec.feature_dim;

  // Two orthogonal directions; crackle and wheeze sit along them, "both" is
  // their superposition.
  Rng64 mean_rng(mix_seed(spec.seed, kMeanSalt));
  Vec64 u1 = random_unit(mean_rng, dim);
  Vec64 u2 = random_unit(mean_rng, dim);
  double dot = std::inner_product(u1.begin(), u1.end(), u2.begin(), 0.0);
  for (std::size_t i = 0; i < dim; ++i) u2[i] -= dot * u1[i];
  double n2 = std::sqrt(std::inner_product(u2.begin(), u2.end(), u2.begin(), 0.0));
  for (double& x : u2) x /= n2;

  std::array<Vec64, kClassCount> means;
  means[0] = Vec64(dim, 0.0);
  means[1] = Vec64(dim);
  means[2] = Vec64(dim);
  means[3] = Vec64(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    means[1][i] = spec.class_separation * u1[i];
    means[2][i] = spec.class_separation * u2[i];
    means[3][i] = means[1][i] + means[2][i] - means[0][i];
  }

  std::array<double, kClassCount> cum{};
  double acc = 0.0;
  for (std::size_t c = 0; c < kClassCount; ++c) {
    acc += spec.class_priors[c];
    cum[c] = acc;
  }
  cum[kClassCount - 1] = 1.0;

  Rng64 rng(mix_seed(spec.seed, kDataSalt));
  std::vector<SampleRecord> records;
  records.reserve(spec.n_patients * spec.cycles_per_patient);
  char buf[64];
  for (std::size_t p = 0; p < spec.n_patients; ++p) {
    std::snprintf(buf, sizeof(buf), "p%04zu", p + 1);
    std::string patient_id(buf);
    for (std::size_t c = 0; c < spec.cycles_per_patient; ++c) {
      SampleRecord rec;
      rec.patient_id = patient_id;
      std::snprintf(buf, sizeof(buf), "%s_c%04zu", patient_id.c_str(), c + 1);
      rec.sample_id = buf;
      double u = rng.uniform01();
      int label = 0;
      while (label + 1 < static_cast<int>(kClassCount) && u >= cum[label])
        ++label;
      rec.label = label;
      rec.features.resize(dim);
      for (std::size_t i = 0; i < dim; ++i) {
        rec.features[i] = means[label][i] + spec.noise_sigma * rng.normal();
      }
      rec.split = Split::Train;
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::pair<std::vector<SampleRecord>, std::vector<SampleRecord>>
split_by_patient(const std::vector<SampleRecord>& data, double train_fraction,
                 std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw ConfigError("train_fraction must be in (0, 1)");
  std::set<std::string> patient_set;
  for (const auto& rec : data) patient_set.insert(rec.patient_id);
  if (patient_set.size() < 2)
    throw ConfigError("need at least 2 patients to split");

  std::vector<std::string> patients(patient_set.begin(), patient_set.end());
  Rng64 rng(mix_seed(seed, kSplitSalt));
  rng.shuffle(patients);

  std::size_t n = patients.size();
  std::size_t n_train = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * train_fraction));
  n_train = std::clamp<std::size_t>(n_train, 1, n - 1);

  std::set<std::string> train_patients(patients.begin(),
                                       patients.begin() + n_train);
  std::vector<SampleRecord> train, test;
  for (const auto& rec : data) {
    SampleRecord copy = rec;
    if (train_patients.count(rec.patient_id)) {
      copy.split = Split::Train;
      train.push_back(std::move(copy));
    } else {
      copy.split = Split::Test;
      test.push_back(std::move(copy));
    }
  }
  return {std::move(train), std::move(test)};
}

void save_csv(const std::vector<SampleRecord>& data,
              const std::filesystem::path& path) {
  std::size_t dim = data.empty() ? 0 : data.front().features.size();
  std::ostringstream out;
  out << "sample_id,patient_id,split,label";
  for (std::size_t i = 0; i < dim; ++i) out << ",f" << i;
  out << "\n";
  for (const auto& rec : data) {
    out << rec.sample_id << ',' << rec.patient_id << ','
        << split_name(rec.split) << ',' << rec.label;
    for (double f : rec.features) out << ',' << format_g17(f);
    out << "\n";
  }
  atomic_write_file(path, out.str());
}

std::vector<SampleRecord> load_csv(const std::filesystem::path& path) {
  std::string content = read_file(path);
  std::istringstream in(content);
  std::string line;
  if (!std::getline(in, line) || line.empty())
    throw ParseError(path.string() + ": missing header");

  std::vector<std::string> header = split_fields(line);
  const std::vector<std::string> fixed = {"sample_id", "patient_id", "split",
                                          "label"};
  if (header.size() < fixed.size() + 1) {
    throw ParseError(path.string() + ": header has too few columns");
  }
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (header[i] != fixed[i])
      throw ParseError(path.string() + ": missing column '" + fixed[i] + "'");
  }
  std::size_t dim = header.size() - fixed.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (header[fixed.size() + i] != "f" + std::to_string(i))
      throw ParseError(path.string() + ": missing column 'f" +
                       std::to_string(i) + "'");
  }

  std::vector<SampleRecord> records;
  std::set<std::string> seen_ids;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(header.size()) + " fields, got " +
                       std::to_string(fields.size()));
    }
    SampleRecord rec;
    rec.sample_id = fields[0];
    rec.patient_id = fields[1];
    rec.split = parse_split(fields[2]);
    double lbl = parse_double_field(fields[3], line_no, "label");
    if (lbl != std::floor(lbl) || lbl < 0 || lbl > 3) {
      throw ParseError("line " + std::to_string(line_no) + ": label '" +
                       fields[3] + "' not in 0..3");
    }
    rec.label = static_cast<int>(lbl);
    rec.features.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      rec.features[i] = parse_double_field(fields[4 + i], line_no,
                                           "feature f" + std::to_string(i));
    }
    if (!seen_ids.insert(rec.sample_id).second) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": duplicate sample_id '" + rec.sample_id + "'");
    }
    records.push_back(std::move(rec));
  }
  return records;
}

Vec64 mask_augment(const Vec64& features, std::size_t max_width, Rng64& rng) {
  if (max_width > features.size())
    throw ConfigError("mask_augment: max_width exceeds feature dimension");
  Vec64 out = features;
  if (max_width == 0) return out;
  std::size_t width = rng.uniform_index(max_width + 1);
  if (width == 0) return out;
  std::size_t start = rng.uniform_index(features.size() - width + 1);
  std::fill(out.begin() + static_cast<std::ptrdiff_t>(start),
            out.begin() + static_cast<std::ptrdiff_t>(start + width), 0.0);
  return out;
}

}  // namespace distilkit

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "distilkit/numerics.hpp"

namespace distilkit {

inline constexpr std::size_t kClassCount = 4;

// Class indices follow the usual respiratory-cycle convention:
// 0 normal, 1 crackle, 2 wheeze, 3 both (crackle and wheeze).
enum class ClassLabel : int { Normal = 0, Crackle = 1, Wheeze = 2, Both = 3 };

enum class Split { Train, Test };

std::string split_name(Split s);
Split parse_split(const std::string& s);

struct SampleRecord {
  std::string sample_id;
  std::string patient_id;
  int label = 0;  // 0..3
  Vec64 features;
  Split split = Split::Train;

  bool operator==(const SampleRecord&) const = default;
};

// Synthetic stand-in for a small clinical corpus: Gaussian class-conditional
// features, several cycles per patient, class priors skewed toward normal.
struct DatasetSpec {
  std::size_t n_patients = 60;
  std::size_t cycles_per_patient = 40;
  std::size_t feature_dim = 32;
  std::array<double, kClassCount> class_priors{0.5, 0.25, 0.15, 0.10};
  double class_separation = 3.0;
  double noise_sigma = 1.0;
  std::uint64_t seed = 7;
};

// Deterministic in spec.seed. Crackle and wheeze means sit at distance
// class_separation from the normal mean along orthogonal directions; the
// "both" mean is crackle + wheeze - normal, so the fourth class is a genuine
// superposition and stays confusable with its parents.
std::vector<SampleRecord> generate(const DatasetSpec& spec);

// Patient-disjoint split. Train gets floor(n_patients * train_fraction)
// patients, clamped so both sides keep at least one patient.
std::pair<std::vector<SampleRecord>, std::vector<SampleRecord>>
split_by_patient(const std::vector<SampleRecord>& data, double train_fraction,
                 std::uint64_t seed);

// CSV schema: sample_id,patient_id,split,label,f0..f{D-1}. UTF-8, LF line
// endings, floats at 17 significant digits so save->load round-trips exactly.
void save_csv(const std::vector<SampleRecord>& data,
              const std::filesystem::path& path);
std::vector<SampleRecord> load_csv(const std::filesystem::path& path);

// Zeroes one contiguous run of length uniform in [0, max_width]. The 1-D
// analog of time/frequency masking used during training.
Vec64 mask_augment(const Vec64& features, std::size_t max_width, Rng64& rng);

}  // namespace distilkit

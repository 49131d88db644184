#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "opmine/post.hpp"

namespace opmine {

enum class PostFormat { jsonl, csv };

// Loads records in file order. Throws with the offending line number on
// parse errors, on unknown label values, and on duplicate ids (listing
// the offenders).
std::vector<PostRecord> load_posts(const std::string& path, PostFormat format);

void save_posts(const std::string& path, const std::vector<PostRecord>& records,
                PostFormat format);

struct DatasetSplit {
  std::vector<PostRecord> train;
  std::vector<PostRecord> test;
  std::uint64_t seed = 0;
  double ratio = 0.0;
};

// Uniform seeded permutation, then a prefix/suffix cut with
// |train| = round-half-up(ratio * total). Pure function of its arguments.
// Requires 0 < ratio < 1 and at least two records.
DatasetSplit split_train_test(const std::vector<PostRecord>& records,
                              double ratio, std::uint64_t seed);

}  // namespace opmine

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace opmine {

enum class Sentiment { positive, neutral, negative };

// Canonical class order used for sentiment datasets and tie-breaking.
inline constexpr std::array<std::string_view, 3> kSentimentClasses = {
    "positive", "neutral", "negative"};

std::string_view to_string(Sentiment s);
std::optional<Sentiment> sentiment_from_string(std::string_view s);

// One ingested social-media text. Immutable after loading.
struct PostRecord {
  std::string id;
  std::int64_t timestamp = 0;  // UTC epoch seconds
  std::string text;
  std::string dataset_tag;     // date-bucket name, e.g. "2020-03-20_21"
  std::optional<Sentiment> gold_label;

  bool operator==(const PostRecord&) const = default;
};

// Lenient ISO-8601 parsing: "YYYY-MM-DD" (midnight UTC), optional
// "T"/" " separator, optional seconds and fraction, optional "Z" or
// "+hh:mm"/"-hh:mm"/"+hhmm" offset. Throws std::invalid_argument.
std::int64_t parse_timestamp_utc(std::string_view s);

// "YYYY-MM-DDThh:mm:ssZ"
std::string format_timestamp_utc(std::int64_t epoch_seconds);

}  // namespace opmine

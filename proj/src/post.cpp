#include "opmine/post.hpp"

#include <cstdio>
#include <stdexcept>

namespace opmine {

namespace {

// Days since 1970-01-01 for a civil date (Howard Hinnant's algorithm).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y += m <= 2;
}

bool is_leap(std::int64_t y) {
  return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0);
}

unsigned days_in_month(std::int64_t y, unsigned m) {
  static constexpr unsigned lengths[] = {31, 28, 31, 30, 31, 30,
                                         31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return lengths[m - 1];
}

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  // Reads exactly `digits` decimal digits into `out`.
  bool number(int digits, std::int64_t& out) {
    out = 0;
    for (int i = 0; i < digits; ++i) {
      char c = peek();
      if (c < '0' || c > '9') return false;
      out = out * 10 + (c - '0');
      ++pos;
    }
    return true;
  }
};

[[noreturn]] void bad_timestamp(std::string_view s) {
  throw std::invalid_argument("invalid timestamp: '" + std::string(s) + "'");
}

}  // namespace

std::string_view to_string(Sentiment s) {
  switch (s) {
    case Sentiment::positive: return kSentimentClasses[0];
    case Sentiment::neutral: return kSentimentClasses[1];
    case Sentiment::negative: return kSentimentClasses[2];
  }
  return "neutral";
}

std::optional<Sentiment> sentiment_from_string(std::string_view s) {
  if (s == "positive") return Sentiment::positive;
  if (s == "neutral") return Sentiment::neutral;
  if (s == "negative") return Sentiment::negative;
  return std::nullopt;
}

std::int64_t parse_timestamp_utc(std::string_view s) {
  Cursor cur{s};
  std::int64_t year, month, day;
  if (!cur.number(4, year) || !cur.eat('-') || !cur.number(2, month) ||
      !cur.eat('-') || !cur.number(2, day)) {
    bad_timestamp(s);
  }
  if (month < 1 || month > 12 || day < 1 ||
      day > days_in_month(year, static_cast<unsigned>(month))) {
    bad_timestamp(s);
  }

  std::int64_t hour = 0, minute = 0, second = 0;
  std::int64_t offset_seconds = 0;
  if (!cur.done()) {
    if (!cur.eat('T') && !cur.eat(' ')) bad_timestamp(s);
    if (!cur.number(2, hour) || !cur.eat(':') || !cur.number(2, minute)) {
      bad_timestamp(s);
    }
    if (cur.eat(':')) {
      if (!cur.number(2, second)) bad_timestamp(s);
      if (cur.eat('.')) {  // fractional seconds are accepted and dropped
        bool any = false;
        while (!cur.done() && cur.peek() >= '0' && cur.peek() <= '9') {
          ++cur.pos;
          any = true;
        }
        if (!any) bad_timestamp(s);
      }
    }
    if (hour > 23 || minute > 59 || second > 60) bad_timestamp(s);

    if (!cur.done()) {
      char c = cur.peek();
      if (c == 'Z') {
        ++cur.pos;
      } else if (c == '+' || c == '-') {
        ++cur.pos;
        std::int64_t oh, om = 0;
        if (!cur.number(2, oh)) bad_timestamp(s);
        if (cur.eat(':')) {
          if (!cur.number(2, om)) bad_timestamp(s);
        } else if (!cur.done()) {
          if (!cur.number(2, om)) bad_timestamp(s);
        }
        offset_seconds = (oh * 3600 + om * 60) * (c == '+' ? 1 : -1);
      } else {
        bad_timestamp(s);
      }
    }
  }
  if (!cur.done()) bad_timestamp(s);

  std::int64_t days = days_from_civil(year, static_cast<unsigned>(month),
                                      static_cast<unsigned>(day));
  return days * 86400 + hour * 3600 + minute * 60 + second - offset_seconds;
}

std::string format_timestamp_utc(std::int64_t epoch_seconds) {
  std::int64_t days = epoch_seconds / 86400;
  std::int64_t rem = epoch_seconds % 86400;
  if (rem < 0) {
    rem += 86400;
    days -= 1;
  }
  std::int64_t y;
  unsigned m, d;
  civil_from_days(days, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<long long>(y), m, d,
                static_cast<long long>(rem / 3600),
                static_cast<long long>((rem % 3600) / 60),
                static_cast<long long>(rem % 60));
  return buf;
}

}  // namespace opmine

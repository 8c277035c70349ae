#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rxmeet {

// Letters are dense nonnegative integers. [A-Za-z] map to their ASCII
// codes and '$' to 128, so the marker orders after every alphabetic
// letter; other ids are written as #<id> in regexp text (digits are
// reserved for run counts). Dense ids let letter-indexed tables answer
// set membership in O(1).
using LetterId = std::int32_t;

inline constexpr LetterId kDollar = 128;

// A word is a (possibly empty) sequence of letters.
using Word = std::vector<LetterId>;

std::optional<LetterId> letter_from_char(char c);
bool letter_is_printable(LetterId id);
std::string letter_display(LetterId id);

// The empty word displays as "<epsilon>"; word_from_text accepts that
// token back.
std::string word_display(const Word& w);
// Inverse of word_display. Throws std::invalid_argument on bad syntax.
Word word_from_text(const std::string& text);

// Direct-address letter set with O(1) reset: begin_round() bumps a stamp
// instead of clearing the table.
class StampSet {
 public:
  void begin_round() {
    if (++round_ == 0) {  // stamp wrapped; start over
      stamp_.assign(stamp_.size(), 0);
      round_ = 1;
    }
  }

  void add(LetterId id) {
    if (static_cast<std::size_t>(id) >= stamp_.size()) stamp_.resize(id + 1, 0);
    stamp_[id] = round_;
  }

  bool contains(LetterId id) const {
    return id >= 0 && static_cast<std::size_t>(id) < stamp_.size() &&
           stamp_[id] == round_;
  }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t round_ = 0;
};

// Per-letter counters with the same lazy-reset trick.
class StampCounter {
 public:
  void begin_round() {
    if (++round_ == 0) {
      stamp_.assign(stamp_.size(), 0);
      round_ = 1;
    }
  }

  // Returns the counter value after incrementing.
  std::int64_t increment(LetterId id) {
    touch(id);
    return ++count_[id];
  }

  std::int64_t count(LetterId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= stamp_.size()) return 0;
    return stamp_[id] == round_ ? count_[id] : 0;
  }

 private:
  void touch(LetterId id) {
    if (static_cast<std::size_t>(id) >= stamp_.size()) {
      stamp_.resize(id + 1, 0);
      count_.resize(id + 1, 0);
    }
    if (stamp_[id] != round_) {
      stamp_[id] = round_;
      count_[id] = 0;
    }
  }

  std::vector<std::uint32_t> stamp_;
  std::vector<std::int64_t> count_;
  std::uint32_t round_ = 0;
};

}  // namespace rxmeet

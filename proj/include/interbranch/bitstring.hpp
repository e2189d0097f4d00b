#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace interbranch {

/// A classical bit-string read left to right: position 0 is the leftmost
/// character and the most significant bit.
class BitString {
 public:
  BitString() = default;

  /// Throws std::invalid_argument on any character other than '0' or '1'.
  explicit BitString(std::string_view bits);

  static BitString zeros(std::size_t width);
  /// Low `width` bits of `value`, most significant first.
  static BitString from_uint(std::uint64_t value, std::size_t width);

  std::size_t width() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] == '1'; }
  bool all_zero() const;
  std::size_t popcount() const;
  std::uint64_t to_uint() const;

  std::string const& str() const { return bits_; }

  friend bool operator==(BitString const&, BitString const&) = default;
  friend auto operator<=>(BitString const&, BitString const&) = default;

 private:
  std::string bits_;
};

/// Message payload written by the friend. Never empty; all-zero messages
/// are legal but blank.
class Message {
 public:
  explicit Message(BitString bits);
  explicit Message(std::string_view bits) : Message(BitString(bits)) {}

  static Message from_uint(std::uint64_t value, std::size_t width)
  {
    return Message(BitString::from_uint(value, width));
  }

  std::size_t width() const { return bits_.width(); }
  bool blank() const { return bits_.all_zero(); }
  BitString const& bits() const { return bits_; }
  std::string const& str() const { return bits_.str(); }

  friend bool operator==(Message const&, Message const&) = default;

 private:
  BitString bits_;
};

}  // namespace interbranch

#include "interbranch/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace interbranch {

BitString::BitString(std::string_view bits) : bits_(bits)
{
  if (!std::all_of(bits_.begin(), bits_.end(),
                   [](char c) { return c == '0' || c == '1'; })) {
    throw std::invalid_argument("bit-string may contain only '0' and '1': \"" +
                                bits_ + "\"");
  }
}

BitString BitString::zeros(std::size_t width)
{
  return BitString(std::string(width, '0'));
}

BitString BitString::from_uint(std::uint64_t value, std::size_t width)
{
  if (width > 64) {
    throw std::invalid_argument("bit-string width exceeds 64");
  }
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((value >> (width - 1 - i)) & 1U) {
      s[i] = '1';
    }
  }
  return BitString(s);
}

bool BitString::all_zero() const
{
  return bits_.find('1') == std::string::npos;
}

std::size_t BitString::popcount() const
{
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1'));
}

std::uint64_t BitString::to_uint() const
{
  if (bits_.size() > 64) {
    throw std::out_of_range("bit-string too wide for 64-bit conversion");
  }
  std::uint64_t v = 0;
  for (char c : bits_) {
    v = (v << 1U) | (c == '1' ? 1U : 0U);
  }
  return v;
}

Message::Message(BitString bits) : bits_(std::move(bits))
{
  if (bits_.empty()) {
    throw std::invalid_argument("message must have width >= 1");
  }
}

}  // namespace interbranch

#include "pacheck/rope.hpp"

namespace pacheck {

void Rope::append(uint8_t byte, const BigNat& count) {
  if (count == 0) return;
  if (count < 0) throw Error("Rope: negative run count");
  if (!runs_.empty() && runs_.back().byte == byte)
    runs_.back().count += count;
  else
    runs_.push_back(Run{byte, count});
  size_ += count;
}

void Rope::append(const std::string& s) {
  for (unsigned char c : s) append(c);
}

void Rope::append(const Rope& other) {
  for (const Run& r : other.runs_) append(r.byte, r.count);
}

int Rope::lex_compare(const Rope& other) const {
  std::size_t i = 0, j = 0;
  BigNat ri = 0, rj = 0;  // consumed within current runs
  while (i < runs_.size() && j < other.runs_.size()) {
    if (runs_[i].byte != other.runs_[j].byte)
      return runs_[i].byte < other.runs_[j].byte ? -1 : 1;
    BigNat left_i = runs_[i].count - ri;
    BigNat left_j = other.runs_[j].count - rj;
    if (left_i == left_j) {
      i++, j++, ri = 0, rj = 0;
    } else if (left_i < left_j) {
      rj += left_i;
      i++, ri = 0;
    } else {
      ri += left_j;
      j++, rj = 0;
    }
  }
  if (i < runs_.size()) return 1;
  if (j < other.runs_.size()) return -1;
  return 0;
}

std::string Rope::to_string(std::size_t max_len) const {
  if (size_ > max_len) throw Error("Rope: flat rendering too long to materialize");
  std::string out;
  out.reserve(static_cast<std::size_t>(size_));
  for (const Run& r : runs_)
    out.append(static_cast<std::size_t>(r.count), static_cast<char>(r.byte));
  return out;
}

BigNat Rope::to_value(std::size_t max_len) const {
  if (size_ > max_len) throw Error("Rope: value too large to materialize");
  // Horner over runs: a digit d repeated n times contributes
  // d * (256^n - 1) / 255 after shifting the prefix by 256^n.
  BigNat value = 0;
  for (const Run& r : runs_) {
    BigNat p = big_pow(256, r.count);
    value = value * p + BigNat(r.byte + 1) * ((p - 1) / 255);
  }
  return value;
}

Rope Rope::from_value(const BigNat& value) {
  if (value < 0) throw Error("Rope: negative value");
  std::vector<uint8_t> bytes;
  BigNat v = value;
  while (v > 0) {
    BigNat d = v % 256;
    if (d == 0) {
      d = 256;
      v = v / 256 - 1;
    } else {
      v = v / 256;
    }
    bytes.push_back(static_cast<uint8_t>(static_cast<unsigned>(d) - 1));
  }
  Rope r;
  for (auto it = bytes.rbegin(); it != bytes.rend(); ++it) r.append(*it);
  return r;
}

}  // namespace pacheck

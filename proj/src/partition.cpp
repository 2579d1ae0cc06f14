#include "w22/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace w22 {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  std::sort(parts_.begin(), parts_.end());
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::multiplicity(int k) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::all_nonpositive() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p <= 0; });
}

bool Partition::all_positive() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p > 0; });
}

Partition Partition::prefix(std::size_t i) const {
  if (i > parts_.size()) throw std::out_of_range("partition prefix index out of range");
  Partition out;
  out.parts_.assign(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

Partition Partition::suffix(std::size_t j) const {
  if (j > parts_.size()) throw std::out_of_range("partition suffix index out of range");
  Partition out;
  out.parts_.assign(parts_.begin() + static_cast<std::ptrdiff_t>(j), parts_.end());
  return out;
}

Partition Partition::without(std::size_t i) const {
  if (i == 0 || i > parts_.size()) throw std::out_of_range("partition removal index out of range");
  Partition out = *this;
  out.parts_.erase(out.parts_.begin() + static_cast<std::ptrdiff_t>(i - 1));
  return out;
}

Partition Partition::with(int k) const {
  Partition out = *this;
  out.parts_.insert(std::upper_bound(out.parts_.begin(), out.parts_.end(), k), k);
  return out;
}

bool canonical_less(const Partition& a, const Partition& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  const int wa = a.weight();
  const int wb = b.weight();
  if (wa != wb) return wa > wb;
  auto pa = a.parts();
  auto pb = b.parts();
  return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

std::string to_string(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

namespace {

// Extends `current` with parts no larger than `max_part` (keeping the
// non-decreasing order when read back to front).
void extend(std::vector<int>& current, int max_part, int budget, int slots,
            std::vector<Partition>& out) {
  out.emplace_back(current);
  if (slots == 0) return;
  for (int part = std::min(max_part, 0); -part <= budget; --part) {
    current.push_back(part);
    extend(current, part, budget + part, slots - 1, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_nonpositive(int max_degree, int max_length) {
  if (max_degree < 0 || max_length < 0) throw std::invalid_argument("enumeration bounds must be non-negative");
  std::vector<Partition> out;
  std::vector<int> current;
  extend(current, 0, max_degree, max_length, out);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::size_t hash_value(const Partition& p) {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ p.length();
  for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x + 0x1000)) * 0x100000001b3ULL;
  return h;
}

}  // namespace w22

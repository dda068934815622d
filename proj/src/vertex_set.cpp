#include "isolation/vertex_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace isolation {

VertexSet::VertexSet(std::size_t universe) : universe_(universe) {
  if (universe_ > 64) words_.assign(word_count(), 0);
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::uint64_t* w = s.data();
  for (std::size_t i = 0; i < s.word_count(); ++i) w[i] = ~std::uint64_t{0};
  if (universe % 64 != 0) w[s.word_count() - 1] = (std::uint64_t{1} << (universe % 64)) - 1;
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe_));
  }
  data()[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) data()[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::clear() {
  std::uint64_t* w = data();
  for (std::size_t i = 0; i < word_count(); ++i) w[i] = 0;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  const std::uint64_t* w = data();
  for (std::size_t i = 0; i < word_count(); ++i) total += std::popcount(w[i]);
  return total;
}

bool VertexSet::empty() const {
  const std::uint64_t* w = data();
  for (std::size_t i = 0; i < word_count(); ++i)
    if (w[i] != 0) return false;
  return true;
}

Vertex VertexSet::next(Vertex from) const {
  if (from >= universe_) return npos;
  const std::uint64_t* w = data();
  std::size_t i = from >> 6;
  std::uint64_t word = w[i] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word != 0) return (i << 6) + static_cast<Vertex>(std::countr_zero(word));
    if (++i >= word_count()) return npos;
    word = w[i];
  }
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw std::invalid_argument("vertex sets over different universes (" +
                                std::to_string(universe_) + " vs " +
                                std::to_string(other.universe_) + ")");
  }
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_universe(other);
  const std::uint64_t* a = data();
  const std::uint64_t* b = other.data();
  for (std::size_t i = 0; i < word_count(); ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_universe(other);
  const std::uint64_t* a = data();
  const std::uint64_t* b = other.data();
  for (std::size_t i = 0; i < word_count(); ++i)
    if ((a[i] & ~b[i]) != 0) return false;
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  std::uint64_t* a = data();
  const std::uint64_t* b = other.data();
  for (std::size_t i = 0; i < word_count(); ++i) a[i] |= b[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  std::uint64_t* a = data();
  const std::uint64_t* b = other.data();
  for (std::size_t i = 0; i < word_count(); ++i) a[i] &= b[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  std::uint64_t* a = data();
  const std::uint64_t* b = other.data();
  for (std::size_t i = 0; i < word_count(); ++i) a[i] &= ~b[i];
  return *this;
}

bool operator==(const VertexSet& a, const VertexSet& b) {
  if (a.universe_ != b.universe_) return false;
  return std::equal(a.data(), a.data() + a.word_count(), b.data());
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  Vertex x = a.first();
  Vertex y = b.first();
  while (x != VertexSet::npos && y != VertexSet::npos) {
    if (x != y) return x <=> y;
    x = a.next(x + 1);
    y = b.next(y + 1);
  }
  // A proper prefix sorts first.
  if (x == VertexSet::npos && y == VertexSet::npos) return a.universe_ <=> b.universe_;
  return x == VertexSet::npos ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  for (Vertex v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first_member = true;
  for (Vertex v : *this) {
    if (!first_member) os << ',';
    os << v;
    first_member = false;
  }
  os << '}';
  return os.str();
}

std::size_t VertexSet::hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
  const std::uint64_t* w = data();
  for (std::size_t i = 0; i < word_count(); ++i) {
    h ^= w[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace isolation

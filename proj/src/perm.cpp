#include "torustab/perm.hpp"

#include <algorithm>
#include <sstream>

#include "torustab/errors.hpp"

namespace torustab {

namespace {

void require_same_size(const Perm& p, const Perm& q, const char* op) {
  if (p.size() != q.size()) {
    throw StructuralError(std::string(op) + ": permutation sizes differ (" + std::to_string(p.size()) +
                          " vs " + std::to_string(q.size()) + ")");
  }
}

}  // namespace

Perm::Perm(std::vector<Dart> images) : images_(std::move(images)) {
  const auto n = images_.size();
  std::vector<char> seen(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Dart d = images_[i];
    if (d < 1 || static_cast<std::size_t>(d) > n) {
      throw StructuralError("Perm: image " + std::to_string(d) + " at position " + std::to_string(i + 1) +
                            " is outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(d)]) {
      throw StructuralError("Perm: image " + std::to_string(d) + " appears twice");
    }
    seen[static_cast<std::size_t>(d)] = 1;
  }
}

Perm Perm::identity(std::size_t size) {
  std::vector<Dart> images(size);
  for (std::size_t i = 0; i < size; ++i) images[i] = static_cast<Dart>(i + 1);
  return from_images_unchecked(std::move(images));
}

Perm Perm::from_cycles(std::size_t size, const std::vector<Cycle>& cycle_list) {
  std::vector<Dart> images(size, 0);
  for (std::size_t i = 0; i < size; ++i) images[i] = static_cast<Dart>(i + 1);
  std::vector<char> used(size + 1, 0);
  for (const auto& c : cycle_list) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Dart h = c[k];
      if (h < 1 || static_cast<std::size_t>(h) > size) {
        throw StructuralError("Perm::from_cycles: dart " + std::to_string(h) + " out of range");
      }
      if (used[static_cast<std::size_t>(h)]) {
        throw StructuralError("Perm::from_cycles: dart " + std::to_string(h) + " appears in two cycles");
      }
      used[static_cast<std::size_t>(h)] = 1;
      images[static_cast<std::size_t>(h - 1)] = c[(k + 1) % c.size()];
    }
  }
  return from_images_unchecked(std::move(images));
}

Perm Perm::from_images_unchecked(std::vector<Dart> images) {
  Perm p;
  p.images_ = std::move(images);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<Dart>(i + 1)) return false;
  }
  return true;
}

bool Perm::is_fixed_point_free_involution() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const Dart h = static_cast<Dart>(i + 1);
    const Dart image = images_[i];
    if (image == h || (*this)(image) != h) return false;
  }
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  require_same_size(p, q, "compose");
  std::vector<Dart> images(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) images[i] = q(p(static_cast<Dart>(i + 1)));
  return Perm::from_images_unchecked(std::move(images));
}

Perm inverse(const Perm& p) {
  std::vector<Dart> images(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) images[static_cast<std::size_t>(p.images()[i] - 1)] = static_cast<Dart>(i + 1);
  return Perm::from_images_unchecked(std::move(images));
}

Perm conjugate(const Perm& p, const Perm& relabel) {
  require_same_size(p, relabel, "conjugate");
  std::vector<Dart> images(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Dart h = static_cast<Dart>(i + 1);
    images[static_cast<std::size_t>(relabel(h) - 1)] = relabel(p(h));
  }
  return Perm::from_images_unchecked(std::move(images));
}

std::vector<Cycle> cycles(const Perm& p) {
  std::vector<Cycle> out;
  std::vector<char> seen(p.size() + 1, 0);
  for (Dart start = 1; static_cast<std::size_t>(start) <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Cycle c;
    for (Dart h = start; !seen[static_cast<std::size_t>(h)]; h = p(h)) {
      seen[static_cast<std::size_t>(h)] = 1;
      c.push_back(h);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t cycle_count(const Perm& p) {
  std::size_t count = 0;
  std::vector<char> seen(p.size() + 1, 0);
  for (Dart start = 1; static_cast<std::size_t>(start) <= p.size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    ++count;
    for (Dart h = start; !seen[static_cast<std::size_t>(h)]; h = p(h)) seen[static_cast<std::size_t>(h)] = 1;
  }
  return count;
}

std::vector<std::size_t> cycle_type(const Perm& p) {
  std::vector<std::size_t> lengths;
  for (const auto& c : cycles(p)) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Perm standard_sigma(int n) {
  if (n < 1) throw DomainError("standard_sigma: crossing count must be at least 1, got " + std::to_string(n));
  std::vector<Dart> images(static_cast<std::size_t>(4 * n));
  for (Dart h = 1; h <= 4 * n; ++h) images[static_cast<std::size_t>(h - 1)] = (h % 4 == 0) ? h - 3 : h + 1;
  return Perm::from_images_unchecked(std::move(images));
}

std::string to_cycle_string(const Perm& p) {
  if (p.is_identity()) return "()";
  std::ostringstream out;
  for (const auto& c : cycles(p)) {
    if (c.size() == 1) continue;
    out << '(';
    for (std::size_t k = 0; k < c.size(); ++k) out << (k ? " " : "") << c[k];
    out << ')';
  }
  return out.str();
}

}  // namespace torustab

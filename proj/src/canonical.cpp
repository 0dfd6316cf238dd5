#include "torustab/canonical.hpp"

#include <algorithm>

#include "torustab/errors.hpp"

namespace torustab {

std::strong_ordering operator<=>(const CanonicalEncoding& a, const CanonicalEncoding& b) {
  if (auto c = a.n <=> b.n; c != 0) return c;
  if (auto c = a.alpha_images <=> b.alpha_images; c != 0) return c;
  return a.sigma_images <=> b.sigma_images;
}

LabelledMap CanonicalEncoding::to_map() const { return LabelledMap(Perm(alpha_images), Perm(sigma_images)); }

CanonicalEncoding encode(const LabelledMap& m) {
  CanonicalEncoding e;
  e.n = m.n();
  e.alpha_images.assign(m.alpha().images().begin(), m.alpha().images().end());
  e.sigma_images.assign(m.sigma().images().begin(), m.sigma().images().end());
  return e;
}

std::strong_ordering compare_encodings(const CanonicalEncoding& a, const CanonicalEncoding& b) {
  if (a.n != b.n || a.alpha_images.size() != b.alpha_images.size() ||
      a.sigma_images.size() != b.sigma_images.size()) {
    throw StructuralError("compare_encodings: encodings have different sizes");
  }
  if (auto c = a.alpha_images <=> b.alpha_images; c != 0) return c;
  return a.sigma_images <=> b.sigma_images;
}

LabelledMap rooted_normalize(const LabelledMap& m, Dart root, bool reversed) {
  const auto size = m.dart_count();
  if (root < 1 || static_cast<std::size_t>(root) > size) {
    throw StructuralError("rooted_normalize: root " + std::to_string(root) + " out of range");
  }
  const Perm s = reversed ? inverse(m.sigma()) : m.sigma();
  std::vector<Dart> label(size + 1, 0);
  std::vector<Dart> order;
  order.reserve(size);
  label[static_cast<std::size_t>(root)] = 1;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Dart h = order[head];
    for (const Dart next : {s(h), m.alpha()(h)}) {
      if (label[static_cast<std::size_t>(next)] == 0) {
        order.push_back(next);
        label[static_cast<std::size_t>(next)] = static_cast<Dart>(order.size());
      }
    }
  }
  if (order.size() != size) throw DomainError("rooted_normalize: map is disconnected");
  const Perm relabel = Perm::from_images_unchecked(std::vector<Dart>(label.begin() + 1, label.end()));
  return LabelledMap(conjugate(m.alpha(), relabel), conjugate(s, relabel));
}

const CanonicalEncoding& Canonicalizer::run(const LabelledMap& m, bool both_orientations) {
  const auto size = m.dart_count();
  label_.assign(size + 1, 0);
  order_.assign(size, 0);
  alpha_.assign(size, 0);
  sigma_.assign(size, 0);
  inverse_sigma_.assign(size + 1, 0);
  for (Dart h = 1; static_cast<std::size_t>(h) <= size; ++h) inverse_sigma_[static_cast<std::size_t>(m.sigma()(h))] = h;

  best_.n = m.n();
  best_.alpha_images.assign(size, 0);
  best_.sigma_images.assign(size, 0);
  bool have_best = false;

  for (int pass = 0; pass < (both_orientations ? 2 : 1); ++pass) {
    const bool reversed = pass == 1;
    for (Dart root = 1; static_cast<std::size_t>(root) <= size; ++root) {
      std::fill(label_.begin(), label_.end(), 0);
      label_[static_cast<std::size_t>(root)] = 1;
      order_[0] = root;
      std::size_t tail = 1;
      // -1: worse than best so far, 0: equal prefix, 1: already better.
      int state = have_best ? 0 : 1;
      for (std::size_t head = 0; head < size; ++head) {
        if (head >= tail) throw DomainError("unsensed_canonical: map is disconnected");
        const Dart h = order_[head];
        const Dart s = reversed ? inverse_sigma_[static_cast<std::size_t>(h)] : m.sigma()(h);
        const Dart a = m.alpha()(h);
        if (label_[static_cast<std::size_t>(s)] == 0) {
          order_[tail++] = s;
          label_[static_cast<std::size_t>(s)] = static_cast<Dart>(tail);
        }
        if (label_[static_cast<std::size_t>(a)] == 0) {
          order_[tail++] = a;
          label_[static_cast<std::size_t>(a)] = static_cast<Dart>(tail);
        }
        const Dart alpha_image = label_[static_cast<std::size_t>(a)];
        alpha_[head] = alpha_image;
        sigma_[head] = label_[static_cast<std::size_t>(s)];
        if (state == 0) {
          if (alpha_image < best_.alpha_images[head]) {
            state = 1;
          } else if (alpha_image > best_.alpha_images[head]) {
            state = -1;
            break;
          }
        }
      }
      if (state < 0) continue;
      if (state == 0 && sigma_ >= best_.sigma_images) continue;
      best_.alpha_images = alpha_;
      best_.sigma_images = sigma_;
      have_best = true;
    }
  }
  return best_;
}

CanonicalEncoding unsensed_canonical(const LabelledMap& m) {
  Canonicalizer c;
  return c.unsensed(m);
}

CanonicalEncoding sensed_canonical(const LabelledMap& m) {
  Canonicalizer c;
  return c.sensed(m);
}

}  // namespace torustab

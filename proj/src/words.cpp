#include "gca/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "gca/errors.hpp"

namespace gca {

GroupSpec free_group(int rank) {
  if (rank < 1 || rank > 26)
    throw UsageError("free group rank must be in 1..26, got " + std::to_string(rank));
  return GroupSpec{GroupKind::FreeGroup, rank};
}

GroupSpec free_abelian(int rank) {
  if (rank < 1)
    throw UsageError("free abelian rank must be >= 1, got " + std::to_string(rank));
  return GroupSpec{GroupKind::FreeAbelian, rank};
}

GroupSpec parse_group_name(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'f' && name[0] != 'z'))
    throw UsageError("group must be f<n> or z<k>, got '" + name + "'");
  char* end = nullptr;
  long rank = std::strtol(name.c_str() + 1, &end, 10);
  if (end == nullptr || *end != '\0')
    throw UsageError("group must be f<n> or z<k>, got '" + name + "'");
  return name[0] == 'f' ? free_group(static_cast<int>(rank))
                        : free_abelian(static_cast<int>(rank));
}

GroupElement::GroupElement(GroupSpec spec) : spec_(spec) {
  if (spec.kind == GroupKind::FreeAbelian) coords_.assign(spec.rank, 0);
}

GroupElement GroupElement::generator(GroupSpec spec, int index, bool inverted) {
  if (index < 0 || index >= spec.rank)
    throw UsageError("generator index " + std::to_string(index) + " out of range");
  GroupElement g(spec);
  if (spec.kind == GroupKind::FreeGroup) {
    g.letters_.push_back(static_cast<std::int8_t>(2 * index + (inverted ? 1 : 0)));
  } else {
    g.coords_[index] = inverted ? -1 : 1;
  }
  return g;
}

namespace {

// Letter code c inverts to c^1 (pairs 2i, 2i+1).
inline std::int8_t letter_inverse(std::int8_t c) { return static_cast<std::int8_t>(c ^ 1); }

}  // namespace

GroupElement GroupElement::from_letters(GroupSpec spec, const std::vector<std::int8_t>& letters) {
  if (spec.kind != GroupKind::FreeGroup)
    throw UsageError("from_letters requires a free group spec");
  GroupElement g(spec);
  for (std::int8_t c : letters) {
    if (c < 0 || c >= 2 * spec.rank) throw UsageError("letter code out of range");
    if (!g.letters_.empty() && g.letters_.back() == letter_inverse(c))
      g.letters_.pop_back();
    else
      g.letters_.push_back(c);
  }
  return g;
}

GroupElement GroupElement::from_vector(GroupSpec spec, std::vector<long long> coords) {
  if (spec.kind != GroupKind::FreeAbelian)
    throw UsageError("from_vector requires a free abelian spec");
  if (static_cast<int>(coords.size()) != spec.rank)
    throw UsageError("coordinate vector has wrong rank");
  GroupElement g(spec);
  g.coords_ = std::move(coords);
  return g;
}

GroupElement GroupElement::parse(GroupSpec spec, const std::string& text) {
  if (spec.kind == GroupKind::FreeGroup) {
    std::vector<std::int8_t> letters;
    letters.reserve(text.size());
    for (char ch : text) {
      int idx;
      bool inverted;
      if (ch >= 'a' && ch <= 'z') {
        idx = ch - 'a';
        inverted = false;
      } else if (ch >= 'A' && ch <= 'Z') {
        idx = ch - 'A';
        inverted = true;
      } else {
        throw UsageError(std::string("bad character '") + ch + "' in word");
      }
      if (idx >= spec.rank)
        throw UsageError(std::string("letter '") + ch + "' outside rank " +
                         std::to_string(spec.rank));
      letters.push_back(static_cast<std::int8_t>(2 * idx + (inverted ? 1 : 0)));
    }
    return from_letters(spec, letters);
  }
  // "[1,-2]"
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw UsageError("abelian element must look like [1,-2], got '" + text + "'");
  std::vector<long long> coords;
  const char* p = text.c_str() + 1;
  const char* stop = text.c_str() + text.size() - 1;
  while (p < stop) {
    char* end = nullptr;
    long long v = std::strtoll(p, &end, 10);
    if (end == p) throw UsageError("bad integer in '" + text + "'");
    coords.push_back(v);
    p = end;
    if (p < stop) {
      if (*p != ',') throw UsageError("expected ',' in '" + text + "'");
      ++p;
    }
  }
  return from_vector(spec, std::move(coords));
}

std::string GroupElement::str() const {
  if (spec_.kind == GroupKind::FreeGroup) {
    std::string out;
    out.reserve(letters_.size());
    for (std::int8_t c : letters_)
      out.push_back(static_cast<char>((c & 1 ? 'A' : 'a') + (c >> 1)));
    return out;
  }
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(coords_[i]);
  }
  out.push_back(']');
  return out;
}

long long GroupElement::length() const {
  if (spec_.kind == GroupKind::FreeGroup)
    return static_cast<long long>(letters_.size());
  long long sum = 0;
  for (long long v : coords_) sum += std::llabs(v);
  return sum;
}

GroupElement GroupElement::inverse() const {
  GroupElement g(spec_);
  if (spec_.kind == GroupKind::FreeGroup) {
    g.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      g.letters_.push_back(letter_inverse(*it));
  } else {
    for (std::size_t i = 0; i < coords_.size(); ++i) g.coords_[i] = -coords_[i];
  }
  return g;
}

bool GroupElement::operator==(const GroupElement& other) const {
  return spec_ == other.spec_ && letters_ == other.letters_ && coords_ == other.coords_;
}

bool GroupElement::operator<(const GroupElement& other) const {
  long long la = length(), lb = other.length();
  if (la != lb) return la < lb;
  if (spec_.kind == GroupKind::FreeGroup)
    return std::lexicographical_compare(letters_.begin(), letters_.end(),
                                        other.letters_.begin(), other.letters_.end());
  return std::lexicographical_compare(coords_.begin(), coords_.end(),
                                      other.coords_.begin(), other.coords_.end());
}

GroupElement multiply(const GroupElement& u, const GroupElement& v) {
  if (!(u.spec() == v.spec())) throw UsageError("multiply: group specs differ");
  if (u.spec().kind == GroupKind::FreeGroup) {
    std::vector<std::int8_t> cat = u.letters();
    // Cancel across the junction only; both inputs are already reduced.
    for (std::int8_t c : v.letters()) {
      if (!cat.empty() && cat.back() == static_cast<std::int8_t>(c ^ 1))
        cat.pop_back();
      else
        cat.push_back(c);
    }
    return GroupElement::from_letters(u.spec(), cat);
  }
  std::vector<long long> sum = u.coords();
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += v.coords()[i];
  return GroupElement::from_vector(u.spec(), std::move(sum));
}

unsigned long long ball_size_formula(GroupSpec spec, int radius, unsigned long long saturate) {
  if (radius < 0) throw UsageError("ball radius must be >= 0");
  if (spec.kind == GroupKind::FreeGroup) {
    // 1 + sum_{m=1..L} 2n (2n-1)^(m-1)
    unsigned long long total = 1, sphere = 2ull * spec.rank;
    for (int m = 1; m <= radius; ++m) {
      if (total > saturate - sphere) return saturate;
      total += sphere;
      if (spec.rank > 1 && sphere > saturate / (2ull * spec.rank - 1)) {
        if (m < radius) return saturate;
      } else {
        sphere *= 2ull * spec.rank - 1;
      }
      if (spec.rank == 1) sphere = 2;  // Z as F_1: two words per sphere
    }
    return total;
  }
  // Lattice points with l1 norm <= radius in Z^k: row recursion over rank.
  std::vector<unsigned long long> row(radius + 1, 1);  // rank 0: only the origin
  for (int r = 1; r <= spec.rank; ++r) {
    std::vector<unsigned long long> next(radius + 1, 1);
    for (int m = 1; m <= radius; ++m) {
      // points with |v_r| = j contribute row[m-j], sign doubles j > 0
      unsigned long long acc = row[m];
      for (int j = 1; j <= m; ++j) {
        unsigned long long c = 2ull * row[m - j];
        if (acc > saturate - c) {
          acc = saturate;
          break;
        }
        acc += c;
      }
      next[m] = acc;
    }
    row = std::move(next);
  }
  return row[radius];
}

namespace {

void abelian_sphere(GroupSpec spec, int dim_left, long long budget,
                    std::vector<long long>& current, std::vector<GroupElement>& out,
                    std::size_t cap) {
  if (dim_left == 1) {
    if (budget == 0) {
      current.push_back(0);
      out.push_back(GroupElement::from_vector(spec, current));
      current.pop_back();
    } else {
      for (long long v : {-budget, budget}) {
        current.push_back(v);
        if (out.size() >= cap) throw CapacityError("ball exceeds capacity");
        out.push_back(GroupElement::from_vector(spec, current));
        current.pop_back();
      }
    }
    return;
  }
  for (long long v = -budget; v <= budget; ++v) {
    current.push_back(v);
    abelian_sphere(spec, dim_left - 1, budget - std::llabs(v), current, out, cap);
    current.pop_back();
  }
}

}  // namespace

BallIndex::BallIndex(GroupSpec spec, int radius, std::size_t cap)
    : spec_(spec), radius_(radius) {
  if (radius < 0) throw UsageError("ball radius must be >= 0");
  if (ball_size_formula(spec, radius, cap + 1) > cap)
    throw CapacityError("ball of radius " + std::to_string(radius) +
                        " exceeds capacity " + std::to_string(cap));

  sphere_offsets_.assign(radius + 2, 0);
  elements_.push_back(GroupElement(spec));
  levels_.push_back(0);
  sphere_offsets_[0] = 0;

  if (spec.kind == GroupKind::FreeGroup) {
    // Extend the previous sphere by letters in code order; lexicographic order
    // of parents is inherited by children, so each sphere comes out canonical.
    std::size_t prev_begin = 0, prev_end = 1;
    for (int m = 1; m <= radius; ++m) {
      sphere_offsets_[m] = elements_.size();
      for (std::size_t i = prev_begin; i < prev_end; ++i) {
        // Copy: push_back below may reallocate the backing store.
        const GroupElement w = elements_[i];
        for (std::int8_t c = 0; c < 2 * spec.rank; ++c) {
          if (!w.letters().empty() &&
              w.letters().back() == static_cast<std::int8_t>(c ^ 1))
            continue;
          std::vector<std::int8_t> ext = w.letters();
          ext.push_back(c);
          elements_.push_back(GroupElement::from_letters(spec, ext));
          levels_.push_back(m);
        }
      }
      prev_begin = sphere_offsets_[m];
      prev_end = elements_.size();
    }
  } else {
    std::vector<long long> current;
    for (int m = 1; m <= radius; ++m) {
      sphere_offsets_[m] = elements_.size();
      abelian_sphere(spec, spec.rank, m, current, elements_, cap + 1);
      levels_.resize(elements_.size(), m);
    }
  }
  sphere_offsets_[radius + 1] = elements_.size();
}

std::optional<std::size_t> BallIndex::index_of(const GroupElement& g) const {
  if (!(g.spec() == spec_) || g.length() > radius_) return std::nullopt;
  auto [lo, hi] = sphere_range(static_cast<int>(g.length()));
  auto begin = elements_.begin() + lo, end = elements_.begin() + hi;
  auto it = std::lower_bound(begin, end, g);
  if (it != end && *it == g) return static_cast<std::size_t>(it - elements_.begin());
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> BallIndex::sphere_range(int m) const {
  if (m < 0 || m > radius_) return {elements_.size(), elements_.size()};
  return {sphere_offsets_[m], sphere_offsets_[m + 1]};
}

std::size_t BallIndex::sphere_size(int m) const {
  auto [lo, hi] = sphere_range(m);
  return hi - lo;
}

}  // namespace gca

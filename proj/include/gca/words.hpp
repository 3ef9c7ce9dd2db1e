#ifndef GCA_WORDS_HPP
#define GCA_WORDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gca {

// Groups in scope: free groups F_n on reduced words and free abelian Z^k on
// integer vectors. Both carry the word length: letter count for F_n, l1 norm
// for Z^k. Length is a proper length function (l(e) = 0, subadditive,
// symmetric under inversion), which the operator layer turns into the grading
// and the Dirac multiplier.

enum class GroupKind : std::uint8_t { FreeGroup, FreeAbelian };

struct GroupSpec {
  GroupKind kind = GroupKind::FreeGroup;
  int rank = 1;

  bool operator==(const GroupSpec&) const = default;
};

// rank 1..26 for free groups (one letter pair per generator), rank >= 1 for Z^k.
GroupSpec free_group(int rank);
GroupSpec free_abelian(int rank);

// "f2" / "z3" style names used by the CLI.
GroupSpec parse_group_name(const std::string& name);

class GroupElement {
 public:
  // Identity of the given group.
  explicit GroupElement(GroupSpec spec);

  static GroupElement generator(GroupSpec spec, int index, bool inverted = false);

  // Free-group letters by code (2*gen for the generator, 2*gen+1 for its
  // inverse); the sequence is freely reduced here.
  static GroupElement from_letters(GroupSpec spec, const std::vector<std::int8_t>& letters);

  static GroupElement from_vector(GroupSpec spec, std::vector<long long> coords);

  // Text format: "" identity, lowercase generators, uppercase inverses
  // ("abA"); Z^k as a bracketed vector "[1,-2]". parse() reduces free words.
  static GroupElement parse(GroupSpec spec, const std::string& text);
  std::string str() const;

  const GroupSpec& spec() const { return spec_; }
  const std::vector<std::int8_t>& letters() const { return letters_; }
  const std::vector<long long>& coords() const { return coords_; }

  long long length() const;
  bool is_identity() const { return length() == 0; }

  GroupElement inverse() const;

  bool operator==(const GroupElement& other) const;
  bool operator!=(const GroupElement& other) const { return !(*this == other); }
  // Canonical order: length first, then lexicographic by letter code
  // (a < a^-1 < b < b^-1 ...) or numeric-lexicographic for Z^k.
  bool operator<(const GroupElement& other) const;

 private:
  GroupSpec spec_;
  std::vector<std::int8_t> letters_;  // free groups, reduced
  std::vector<long long> coords_;     // free abelian
};

GroupElement multiply(const GroupElement& u, const GroupElement& v);

inline constexpr std::size_t kDefaultBallCap = 200000;

// Ball {g : l(g) <= radius} in canonical order. Spheres are the contiguous
// level ranges, so index 0 is the identity and levels are nondecreasing.
class BallIndex {
 public:
  BallIndex(GroupSpec spec, int radius, std::size_t cap = kDefaultBallCap);

  const GroupSpec& spec() const { return spec_; }
  int radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }

  const std::vector<GroupElement>& elements() const { return elements_; }
  const GroupElement& at(std::size_t i) const { return elements_[i]; }
  const std::vector<int>& levels() const { return levels_; }

  // Position in canonical order, or nullopt when outside the ball.
  std::optional<std::size_t> index_of(const GroupElement& g) const;

  // Half-open index range [first, last) of sphere m.
  std::pair<std::size_t, std::size_t> sphere_range(int m) const;
  std::size_t sphere_size(int m) const;

 private:
  GroupSpec spec_;
  int radius_;
  std::vector<GroupElement> elements_;
  std::vector<int> levels_;
  std::vector<std::size_t> sphere_offsets_;  // sphere m starts at offsets_[m]
};

// Ball cardinality without enumeration (exact; saturates at cap sentinel).
// Free: 1 + sum_m 2n(2n-1)^(m-1). Abelian: lattice point count by recursion.
unsigned long long ball_size_formula(GroupSpec spec, int radius,
                                     unsigned long long saturate = ~0ull);

}  // namespace gca

#endif

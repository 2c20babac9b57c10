#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "zpi/error.hpp"

namespace zpi {

// Supported coefficient groups. Every supported kind has a decidable word
// problem and a unique normal form per element, which is what the rest of
// the library leans on (canonical serialization, exact equality, total
// order). Finite kinds can be enumerated outright; infinite kinds expose
// word-length balls.
enum class GroupKind { Trivial, Cyclic, Table, FreeAbelian, Free };

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// A group element is a normal-form payload interpreted by its group:
//   trivial:      {}
//   cyclic(m):    {residue} with residue in [0,m)
//   table:        {index} into the multiplication table
//   free-abelian: exponent vector, one entry per generator
//   free:         reduced word of signed letters, +k / -k for x_k / x_k^-1
// Elements do not carry a group pointer; validity is checked by the group
// that interprets them.
class GroupElement {
public:
  GroupElement() = default;
  explicit GroupElement(std::vector<std::int64_t> payload) : w_(std::move(payload)) {}

  const std::vector<std::int64_t>& payload() const { return w_; }
  bool operator==(const GroupElement&) const = default;

private:
  std::vector<std::int64_t> w_;
};

class Group : public std::enable_shared_from_this<Group> {
public:
  static GroupPtr trivial();
  static GroupPtr cyclic(std::int64_t m);
  // table[i][j] = index of g_i * g_j. Checked: Latin square, identity,
  // inverses, associativity.
  static GroupPtr table(std::vector<std::vector<int>> mul);
  static GroupPtr free_abelian(int rank);
  static GroupPtr free(int rank);

  GroupKind kind() const { return kind_; }
  std::int64_t modulus() const { return m_; }
  int rank() const { return rank_; }
  const std::vector<std::vector<int>>& mul_table() const { return table_; }

  bool finite() const;
  std::int64_t size() const;  // finite kinds only

  GroupElement identity() const;
  bool is_identity(const GroupElement& x) const;
  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  GroupElement inv(const GroupElement& a) const;
  bool is_involution(const GroupElement& x) const;  // x*x == 1, x != 1

  // Payload well-formedness for this group (normal form included).
  bool contains(const GroupElement& x) const;
  void require(const GroupElement& x, const char* what) const;

  // Deterministic total order per kind: numeric for cyclic / free-abelian /
  // table indices, length-then-lexicographic for free words with letter
  // order a < a^-1 < b < b^-1 < ...
  bool less(const GroupElement& a, const GroupElement& b) const;

  int word_length(const GroupElement& x) const;

  // All elements of word length <= r, duplicate-free, sorted by the total
  // order. For finite kinds with r >= 1 this is the whole group (every
  // nontrivial element counts as a generator for table groups).
  std::vector<GroupElement> ball(int r) const;

  // Complete enumeration, finite kinds only, sorted.
  std::vector<GroupElement> elements() const;

  // Text form: integers for cyclic/table, "(a,b,...)" for free-abelian,
  // letter words like "a B a" (capital = inverse) for free groups.
  std::string to_string(const GroupElement& x) const;
  GroupElement parse(const std::string& s) const;

  // Structural equality: same kind and same parameters/table.
  bool same(const Group& other) const;
  std::string describe() const;

private:
  Group() = default;

  GroupKind kind_ = GroupKind::Trivial;
  std::int64_t m_ = 1;                     // cyclic modulus
  int rank_ = 0;                           // free / free-abelian rank
  std::vector<std::vector<int>> table_;    // table kind
  std::vector<int> table_inv_;             // per-element inverse index
  int table_identity_ = 0;
};

inline void require_same_group(const Group& a, const Group& b, const char* what) {
  if (!a.same(b)) throw DomainError(std::string(what) + ": group mismatch");
}

// Comparator adapting a group's total order to std containers.
struct GroupElementLess {
  const Group* g;
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    return g->less(a, b);
  }
};

// A homomorphism q: source -> target used as a quotient map. For cyclic,
// free and free-abelian sources it is given on generators (relators are
// checked where they exist); table sources carry the full element map,
// checked to be multiplicative. Surjectivity is verified for finite
// targets by closing the image set.
class QuotientMap {
public:
  static QuotientMap from_generator_images(GroupPtr source, GroupPtr target,
                                           std::vector<GroupElement> images);
  static QuotientMap from_element_map(GroupPtr source, GroupPtr target,
                                      std::vector<GroupElement> images);

  const GroupPtr& source() const { return src_; }
  const GroupPtr& target() const { return dst_; }
  const std::vector<GroupElement>& generator_images() const { return images_; }
  bool is_element_map() const { return element_map_; }

  GroupElement image(const GroupElement& x) const;
  bool kernel_contains(const GroupElement& x) const;

  // Smallest preimage of y: minimal word length, ties broken by the source
  // group's total order. Searches spheres of growing radius; throws
  // ResourceBoundError past max_radius.
  GroupElement minimal_lift(const GroupElement& y, int max_radius = 24) const;

private:
  QuotientMap() = default;
  GroupPtr src_, dst_;
  std::vector<GroupElement> images_;
  bool element_map_ = false;
};

GroupElement quotient_image(const QuotientMap& q, const GroupElement& x);
bool kernel_contains(const QuotientMap& q, const GroupElement& x);
std::vector<GroupElement> ball_enumerate(const Group& g, int r);

}  // namespace zpi

#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace modalg {

inline constexpr std::size_t kMaxGroupOrder = 256;

using Element = std::uint32_t;
using ElementSet = std::bitset<kMaxGroupOrder>;

/// A finite p-group given by its Cayley table. Element 0 is the identity.
///
/// Construction validates the table (Latin square, identity row and column,
/// associativity, p-power order and element orders) and throws InvalidInput
/// naming the first violation. Copies share the immutable table.
class PGroup {
 public:
  PGroup() = default;

  // `table[a][b]` is the index of ab. When the identity is not at index 0,
  // indices 0 and e are swapped before validation.
  static PGroup from_table(unsigned p, const std::vector<std::vector<int>>& table, std::string name);
  // Table given row-major with identity already at 0.
  static PGroup from_flat_table(unsigned p, std::size_t order, std::vector<Element> flat,
                                std::string name);
  static PGroup trivial(unsigned p);

  unsigned prime() const noexcept { return d_->p; }
  std::size_t order() const noexcept { return d_->order; }
  // n with |G| = p^n.
  unsigned log_order() const noexcept { return d_->log_order; }
  const std::string& name() const noexcept { return d_->name; }
  PGroup renamed(std::string name) const;

  Element mul(Element a, Element b) const noexcept { return d_->table[a * d_->order + b]; }
  Element inv(Element a) const noexcept { return d_->inverse[a]; }
  Element pow(Element a, std::uint64_t k) const noexcept;
  Element conj(Element a, Element by) const noexcept { return mul(mul(inv(by), a), by); }
  Element commutator(Element a, Element b) const noexcept {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  std::uint64_t element_order(Element a) const noexcept { return d_->orders[a]; }
  std::uint64_t exponent() const noexcept { return d_->exponent; }
  bool is_abelian() const noexcept { return d_->abelian; }

  std::span<const Element> table() const noexcept { return d_->table; }
  std::vector<std::vector<int>> table_rows() const;

  // Same object or identical tables.
  bool same_table(const PGroup& other) const noexcept;
  bool valid() const noexcept { return static_cast<bool>(d_); }

 private:
  struct Data {
    unsigned p = 2;
    std::size_t order = 1;
    unsigned log_order = 0;
    std::string name;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<std::uint64_t> orders;
    std::uint64_t exponent = 1;
    bool abelian = true;
  };
  explicit PGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// A subgroup of a parent PGroup, held as a membership mask.
class Subgroup {
 public:
  Subgroup() = default;
  // Throws InvalidInput unless `members` is a subgroup of `parent`.
  Subgroup(PGroup parent, const ElementSet& members);

  static Subgroup trivial(const PGroup& g);
  static Subgroup whole(const PGroup& g);
  static Subgroup generated(const PGroup& g, std::span<const Element> generators);

  const PGroup& parent() const noexcept { return parent_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Element g) const noexcept { return g < kMaxGroupOrder && mask_.test(g); }
  const ElementSet& mask() const noexcept { return mask_; }
  // Sorted ascending; the identity comes first.
  const std::vector<Element>& elements() const noexcept { return elements_; }

  bool is_normal() const;
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == parent_.order(); }
  bool is_subgroup_of(const Subgroup& other) const noexcept { return (mask_ & ~other.mask_).none(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept { return a.mask_ == b.mask_; }

 private:
  Subgroup(PGroup parent, const ElementSet& members, std::vector<Element> sorted);
  PGroup parent_;
  ElementSet mask_;
  std::vector<Element> elements_;
};

/// Closure of a set of elements under multiplication (the generated subgroup).
ElementSet closure(const PGroup& g, const ElementSet& seed);

/// A homomorphism given by the images of every source element.
struct GroupHom {
  PGroup source;
  PGroup target;
  std::vector<Element> images;

  Element operator()(Element g) const { return images.at(g); }
  // Throws InvalidInput if the images are not multiplicative.
  void validate() const;
  Subgroup kernel() const;
  Subgroup image(const Subgroup& h) const;
  Subgroup preimage(const Subgroup& h) const;
};

}  // namespace modalg

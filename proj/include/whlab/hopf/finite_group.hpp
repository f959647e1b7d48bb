#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace whlab {

/// Finite group given by its multiplication table on indices 0..n-1.
/// Associativity, identity and inverses are checked on construction.
class FiniteGroupTable {
 public:
  FiniteGroupTable(std::string name, std::vector<std::string> labels,
                   std::vector<std::vector<std::size_t>> table);

  static FiniteGroupTable trivial();
  static FiniteGroupTable cyclic(std::size_t n);
  static FiniteGroupTable direct_product(FiniteGroupTable const& a, FiniteGroupTable const& b);
  static FiniteGroupTable dihedral8();
  static FiniteGroupTable quaternion8();
  /// "1", "Z<n>", "D8", "Q8", products "AxB" and powers "Z2^3".
  static FiniteGroupTable named(std::string_view name);
  /// `order: n`, optional `labels: ...`, then `table:` followed by n rows.
  static FiniteGroupTable parse(std::string_view text, std::string name = "G");
  static FiniteGroupTable load(std::string const& path);

  std::string const& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inv(std::size_t a) const { return inverse_[a]; }
  std::string const& label(std::size_t a) const { return labels_[a]; }
  std::vector<std::string> const& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// The prime p when the order is p^k with k >= 1.
  std::optional<std::uint32_t> p_group_prime() const;

  /// Sorted element list of the subgroup generated by `gens`.
  std::vector<std::size_t> subgroup_generated(std::vector<std::size_t> const& gens) const;
  bool is_subgroup(std::vector<std::size_t> const& elements) const;
  bool is_normal(std::vector<std::size_t> const& subgroup) const;
  /// Table of the subgroup, with element i of the result being subgroup[i].
  FiniteGroupTable restrict_to(std::vector<std::size_t> const& subgroup) const;

  struct Quotient;
  /// Throws DomainError unless `subgroup` is a normal subgroup.
  Quotient quotient(std::vector<std::size_t> const& subgroup) const;

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

struct FiniteGroupTable::Quotient {
  FiniteGroupTable group;
  std::vector<std::size_t> coset_of;  // element of G -> element of G/H
  std::vector<std::size_t> lift;      // element of G/H -> smallest representative in G
};

}  // namespace whlab

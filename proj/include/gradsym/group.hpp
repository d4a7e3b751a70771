#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gradsym/error.hpp"

namespace gradsym {

/// Dense element index; 0 is always the identity.
using GroupElem = std::uint32_t;

inline constexpr std::size_t kMaxGroupOrder = 64;

/// A finite group stored as a validated Cayley table.
class Group {
 public:
  Group() = default;

  static Group cyclic(std::uint32_t n);
  /// C_{n_1} x ... x C_{n_k}; element (a_1..a_k) has index a_1 + n_1 (a_2 + n_2 (...)).
  static Group product(const std::vector<std::uint32_t>& orders);
  /// Dihedral group of order 2n: index k is r^k, index n + k is s r^k.
  static Group dihedral(std::uint32_t n);
  static Group sym3();
  static Group quaternion8();
  /// Explicit Cayley table; row/column 0 must be the identity.
  static Group from_table(const std::vector<std::vector<std::uint32_t>>& table,
                          std::vector<std::string> labels = {});
  static Group trivial() { return cyclic(1); }

  std::size_t order() const { return d_->order; }
  static constexpr GroupElem identity() { return 0; }
  GroupElem mul(GroupElem a, GroupElem b) const { return d_->table[a * d_->order + b]; }
  GroupElem inverse(GroupElem a) const { return d_->inverse[a]; }
  std::uint32_t element_order(GroupElem g) const;
  bool is_abelian() const;
  const std::string& label(GroupElem g) const;
  const std::vector<std::string>& labels() const { return d_->labels; }

  /// Closure of `gens` together with the identity; returned sorted.
  std::vector<GroupElem> subgroup_generated(std::span<const GroupElem> gens) const;

  /// Constructor name ("cyclic", "product", "dihedral", "sym3", "quaternion8", "table").
  const std::string& kind() const { return d_->kind; }
  const std::vector<std::uint32_t>& params() const { return d_->params; }
  std::vector<std::vector<std::uint32_t>> table() const;

  bool valid() const noexcept { return d_ != nullptr; }
  bool operator==(const Group& other) const;
  bool operator!=(const Group& other) const { return !(*this == other); }
  const void* identity_token() const noexcept { return d_.get(); }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<GroupElem> table;
    std::vector<GroupElem> inverse;
    std::vector<std::string> labels;
    std::string kind;
    std::vector<std::uint32_t> params;
  };
  static Group build(std::size_t n, std::vector<GroupElem> table, std::vector<std::string> labels,
                     std::string kind, std::vector<std::uint32_t> params);
  void check(GroupElem g) const;

  std::shared_ptr<const Data> d_;
};

}  // namespace gradsym

#ifndef LATCONE_GROUP_HPP
#define LATCONE_GROUP_HPP

#include "latcone/numeric.hpp"

#include <cstddef>
#include <vector>

namespace latcone {

// A finite group presented by its full multiplication table over element
// indices 0..n-1. Associativity, identity and inverses are verified on
// construction.
class FiniteGroup {
  public:
    explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup dihedral(std::size_t n); // order 2n
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
    static FiniteGroup symmetric3();

    std::size_t order() const { return table_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inv(std::size_t a) const { return inverse_[a]; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    bool is_abelian() const;

    // A small generating set (greedy; identity excluded unless the group is
    // trivial).
    std::vector<std::size_t> generators() const;

  private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::size_t identity_ = 0;
};

} // namespace latcone

#endif

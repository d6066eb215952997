#ifndef ORBICAT_GROUP_HPP
#define ORBICAT_GROUP_HPP

#include <string>
#include <vector>

namespace orbicat {

// A finite group as a multiplication table.  Element 0 is the identity;
// table[g][h] is the product g h (apply h first under the left action
// convention used throughout).
struct FiniteGroup {
    std::string name;
    std::vector<std::vector<long>> table;
    std::vector<std::string> element_names;

    long order() const { return static_cast<long>(table.size()); }
    long inverse(long g) const;
    long element_order(long g) const;
    long exponent() const;  // lcm of the element orders
    bool is_valid() const;  // associativity, identity, inverses
};

FiniteGroup trivial_group();
FiniteGroup cyclic_group(long n);
FiniteGroup klein_four_group();
FiniteGroup symmetric_group_3();
FiniteGroup dihedral_group_4();  // order 8
FiniteGroup quaternion_group_8();

}  // namespace orbicat

#endif

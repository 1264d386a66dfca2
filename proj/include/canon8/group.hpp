#pragma once

// Z2^m group elements and characters, the branch-index convention
// D_1..D_{2^m-1}, and the parity matrix behind the cover equations.
// Index i in 1..2^m-1 corresponds to the element whose bits are the
// binary digits of i, most significant first; characters use the same
// convention.

#include <string>
#include <vector>

namespace canon8 {

struct GroupElement {
    std::vector<int> bits;  // entries in {0,1}, size m >= 1
};

struct Character {
    std::vector<int> bits;
};

GroupElement group_element_for_index(int m, int index);
Character character_for_index(int m, int index);
int index_for_bits(const std::vector<int>& bits);
GroupElement group_xor(const GroupElement& a, const GroupElement& b);

// chi(sigma) = (-1)^(<chi,sigma> mod 2); returns +1 or -1.
int chi_value(const Character& chi, const GroupElement& sigma);

// "1,0,1" style label for character or branch index.
std::string bits_label(int m, int index);

// entry(chi, i) = 1 iff chi(sigma_i) = -1. Rows are the coefficient
// patterns of the cover equations 2L_chi = sum D_i.
class ParityMatrix {
public:
    explicit ParityMatrix(int m);

    int m() const { return m_; }
    int size() const { return size_; }  // 2^m - 1
    int entry(int chi_index, int branch_index) const;
    std::vector<int> row(int chi_index) const;  // branch indices with entry 1

private:
    int m_;
    int size_;
};

// Character order used when printing building-data tables (for m = 3 the
// conventional order 100, 010, 001, 110, 101, 011, 111).
std::vector<int> table_character_order(int m);

}  // namespace canon8

#include "canon8/group.hpp"

#include <stdexcept>

namespace canon8 {

namespace {

std::vector<int> bits_for_index(int m, int index) {
    if (m < 1) throw std::invalid_argument("group rank must be at least 1");
    if (index < 0 || index >= (1 << m)) throw std::out_of_range("index out of range for Z2^m");
    std::vector<int> bits(m);
    for (int t = 0; t < m; ++t) bits[t] = (index >> (m - 1 - t)) & 1;
    return bits;
}

}  // namespace

GroupElement group_element_for_index(int m, int index) { return {bits_for_index(m, index)}; }

Character character_for_index(int m, int index) { return {bits_for_index(m, index)}; }

int index_for_bits(const std::vector<int>& bits) {
    int v = 0;
    for (int b : bits) v = (v << 1) | (b & 1);
    return v;
}

GroupElement group_xor(const GroupElement& a, const GroupElement& b) {
    if (a.bits.size() != b.bits.size()) throw std::invalid_argument("mismatched group ranks");
    GroupElement r = a;
    for (std::size_t i = 0; i < r.bits.size(); ++i) r.bits[i] ^= b.bits[i];
    return r;
}

int chi_value(const Character& chi, const GroupElement& sigma) {
    if (chi.bits.size() != sigma.bits.size()) throw std::invalid_argument("mismatched group ranks");
    int dot = 0;
    for (std::size_t i = 0; i < chi.bits.size(); ++i) dot += chi.bits[i] * sigma.bits[i];
    return (dot % 2 == 0) ? +1 : -1;
}

std::string bits_label(int m, int index) {
    auto bits = bits_for_index(m, index);
    std::string s;
    for (int i = 0; i < m; ++i) {
        if (i) s += ',';
        s += char('0' + bits[i]);
    }
    return s;
}

ParityMatrix::ParityMatrix(int m) : m_(m), size_((1 << m) - 1) {
    if (m < 1) throw std::invalid_argument("group rank must be at least 1");
}

int ParityMatrix::entry(int chi_index, int branch_index) const {
    if (chi_index < 1 || chi_index > size_ || branch_index < 1 || branch_index > size_)
        throw std::out_of_range("parity matrix index out of range");
    return __builtin_popcount(static_cast<unsigned>(chi_index & branch_index)) & 1;
}

std::vector<int> ParityMatrix::row(int chi_index) const {
    std::vector<int> cols;
    for (int i = 1; i <= size_; ++i)
        if (entry(chi_index, i)) cols.push_back(i);
    return cols;
}

std::vector<int> table_character_order(int m) {
    if (m == 3) return {4, 2, 1, 6, 5, 3, 7};
    std::vector<int> order;
    for (int i = 1; i < (1 << m); ++i) order.push_back(i);
    return order;
}

}  // namespace canon8

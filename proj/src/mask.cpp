#include "towns/mask.hpp"

#include <bit>
#include <stdexcept>

namespace towns {

SubsetMask::SubsetMask(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("mask width must be nonnegative");
    words_.assign(static_cast<size_t>((n + 63) / 64), 0);
}

SubsetMask SubsetMask::from_elements(int n, const std::vector<int>& elems) {
    SubsetMask m(n);
    for (int e : elems) m.set(e);
    return m;
}

void SubsetMask::check_element(int element) const {
    if (element < 1 || element > n_)
        throw std::out_of_range("element " + std::to_string(element) +
                                " outside ground set of size " + std::to_string(n_));
}

void SubsetMask::check_width(const SubsetMask& other) const {
    if (n_ != other.n_)
        throw std::invalid_argument("mask width mismatch: " + std::to_string(n_) +
                                    " vs " + std::to_string(other.n_));
}

bool SubsetMask::test(int element) const {
    check_element(element);
    int b = element - 1;
    return (words_[static_cast<size_t>(b >> 6)] >> (b & 63)) & 1u;
}

void SubsetMask::set(int element) {
    check_element(element);
    int b = element - 1;
    words_[static_cast<size_t>(b >> 6)] |= (std::uint64_t{1} << (b & 63));
}

void SubsetMask::reset(int element) {
    check_element(element);
    int b = element - 1;
    words_[static_cast<size_t>(b >> 6)] &= ~(std::uint64_t{1} << (b & 63));
}

long long SubsetMask::count() const {
    long long c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

bool SubsetMask::empty() const {
    for (std::uint64_t w : words_)
        if (w != 0) return false;
    return true;
}

std::vector<int> SubsetMask::elements() const {
    std::vector<int> out;
    for (size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w != 0) {
            int b = std::countr_zero(w);
            out.push_back(static_cast<int>(wi * 64) + b + 1);
            w &= w - 1;
        }
    }
    return out;
}

SubsetMask& SubsetMask::intersect_with(const SubsetMask& other) {
    check_width(other);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

SubsetMask& SubsetMask::unite_with(const SubsetMask& other) {
    check_width(other);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

SubsetMask& SubsetMask::symmetric_difference_with(const SubsetMask& other) {
    check_width(other);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

SubsetMask SubsetMask::complement() const {
    SubsetMask out(n_);
    for (size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    int tail = n_ & 63;
    if (tail != 0 && !out.words_.empty())
        out.words_.back() &= (std::uint64_t{1} << tail) - 1;
    return out;
}

long long SubsetMask::intersect_count(const SubsetMask& other) const {
    check_width(other);
    long long c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
        c += std::popcount(words_[i] & other.words_[i]);
    return c;
}

bool SubsetMask::operator==(const SubsetMask& other) const {
    return n_ == other.n_ && words_ == other.words_;
}

bool SubsetMask::operator<(const SubsetMask& other) const {
    check_width(other);
    for (size_t i = words_.size(); i-- > 0;) {
        if (words_[i] != other.words_[i]) return words_[i] < other.words_[i];
    }
    return false;
}

} // namespace towns

#ifndef OMCAT_SIGN_VECTOR_HPP
#define OMCAT_SIGN_VECTOR_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "omcat/errors.hpp"

namespace omcat {

// Sign vector on an indexed ground set of at most 64 elements, stored as a
// positive-part and a negative-part bitmask.
class SignVector {
  public:
    SignVector() : n_(0), pos_(0), neg_(0) {}
    SignVector(unsigned n, std::uint64_t pos, std::uint64_t neg);
    static SignVector zero(unsigned n) { return SignVector(n, 0, 0); }
    // Parses a string over {+,-,0}, one character per ground element.
    static SignVector parse(const std::string& s);

    unsigned size() const { return n_; }
    std::uint64_t pos_mask() const { return pos_; }
    std::uint64_t neg_mask() const { return neg_; }
    std::uint64_t support() const { return pos_ | neg_; }
    std::uint64_t zero_set() const;
    int sign(unsigned i) const;
    bool is_zero() const { return (pos_ | neg_) == 0; }
    unsigned support_size() const;

    SignVector operator-() const { return SignVector(n_, neg_, pos_); }
    // result(i) = this(i) if nonzero, else other(i)
    SignVector compose(const SignVector& other) const;
    // X is a face of Y iff X∘Y = Y
    bool is_face_of(const SignVector& other) const;
    // {i : this(i) = -other(i) != 0}
    std::uint64_t separation(const SignVector& other) const;
    // true iff every nonzero entry agrees with `other` there
    bool conforms_to(const SignVector& other) const;

    // Keeps the positions listed in `keep` (in order), producing a vector on
    // the smaller ground set.
    SignVector restrict_to(const std::vector<unsigned>& keep) const;
    // Appends one entry with the given sign.
    SignVector append(int sgn) const;
    SignVector flip(std::uint64_t mask) const; // negate signs on mask

    std::string str() const;
    bool operator==(const SignVector& other) const = default;

  private:
    unsigned n_;
    std::uint64_t pos_, neg_;
};

// Deterministic total order used for canonical storage of covector sets:
// entrywise with '+' < '-' < '0', index 0 most significant.
bool trit_less(const SignVector& a, const SignVector& b);

// Tope order used in every matrix/report output: lexicographic on the sign
// string with '+' < '-'.
bool tope_lex_less(const SignVector& a, const SignVector& b);

struct SignVectorHash {
    std::size_t operator()(const SignVector& v) const {
        std::uint64_t h = v.pos_mask() * 0x9e3779b97f4a7c15ULL;
        h ^= v.neg_mask() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h ^ v.size());
    }
};

} // namespace omcat

#endif

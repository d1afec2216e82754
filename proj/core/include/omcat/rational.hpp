#ifndef OMCAT_RATIONAL_HPP
#define OMCAT_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "omcat/errors.hpp"

namespace omcat {

// Exact rational scalar. All linear algebra in the pipeline is exact; no
// floating point anywhere.
using Rat = mpq_class;

Rat rat_parse(const std::string& s);      // accepts "p", "p/q"
std::string rat_str(const Rat& r);        // "p" or "p/q", canonical
int rat_sign(const Rat& r);

// Prime-field scalar with runtime modulus, used as the optional fast field
// for graded quotient computations.
struct FpCtx {
    std::uint64_t p;
    explicit FpCtx(std::uint64_t prime);
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b % p) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t inv(std::uint64_t a) const;
    std::uint64_t from_rat(const Rat& r) const; // throws if denominator is 0 mod p
};

} // namespace omcat

#endif

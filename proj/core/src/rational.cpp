#include "omcat/rational.hpp"

namespace omcat {

Rat rat_parse(const std::string& s) {
    if (s.empty()) throw DomainError("parse", "empty rational literal");
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw DomainError("parse", "malformed rational literal: " + s);
    }
}

std::string rat_str(const Rat& r) {
    return r.get_str();
}

int rat_sign(const Rat& r) {
    return sgn(r);
}

FpCtx::FpCtx(std::uint64_t prime) : p(prime) {
    if (p < 2) throw DomainError("field", "modulus must be a prime >= 2");
    for (std::uint64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) throw DomainError("field", "modulus " + std::to_string(p) + " is not prime");
    if (p > (std::uint64_t(1) << 31)) throw DomainError("field", "modulus too large");
}

std::uint64_t FpCtx::mul(std::uint64_t a, std::uint64_t b) const {
    return (a % p) * (b % p) % p;
}

std::uint64_t FpCtx::inv(std::uint64_t a) const {
    a %= p;
    if (a == 0) throw DomainError("field", "inverse of zero in F_p");
    // Fermat
    std::uint64_t e = p - 2, base = a, acc = 1;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::uint64_t FpCtx::from_rat(const Rat& r) const {
    mpz_class num = r.get_num(), den = r.get_den();
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class dm = den % pz;
    if (dm == 0) throw DomainError("field", "denominator vanishes mod " + std::to_string(p));
    mpz_class nm = num % pz;
    if (nm < 0) nm += pz;
    std::uint64_t n64 = nm.get_ui();
    std::uint64_t d64 = mpz_class(dm < 0 ? dm + pz : dm).get_ui();
    return mul(n64, inv(d64));
}

} // namespace omcat

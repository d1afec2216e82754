#include "omcat/sign_vector.hpp"

#include <bit>

namespace omcat {

namespace {
std::uint64_t full_mask(unsigned n) {
    return n >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
}
} // namespace

SignVector::SignVector(unsigned n, std::uint64_t pos, std::uint64_t neg) : n_(n), pos_(pos), neg_(neg) {
    if (n > 64) throw DimensionError("ground sets of more than 64 elements are not supported");
    std::uint64_t m = full_mask(n);
    if ((pos_ & ~m) || (neg_ & ~m)) throw DimensionError("sign bits outside the ground set");
    if (pos_ & neg_) throw DomainError("sign_vector", "an entry cannot be both + and -");
}

SignVector SignVector::parse(const std::string& s) {
    if (s.size() > 64) throw DimensionError("sign string longer than 64");
    std::uint64_t pos = 0, neg = 0;
    for (unsigned i = 0; i < s.size(); ++i) {
        switch (s[i]) {
            case '+': pos |= std::uint64_t(1) << i; break;
            case '-': neg |= std::uint64_t(1) << i; break;
            case '0': break;
            default: throw DomainError("parse", std::string("bad sign character '") + s[i] + "'");
        }
    }
    return SignVector(static_cast<unsigned>(s.size()), pos, neg);
}

std::uint64_t SignVector::zero_set() const {
    return full_mask(n_) & ~(pos_ | neg_);
}

int SignVector::sign(unsigned i) const {
    if (i >= n_) throw DimensionError("sign index out of range");
    std::uint64_t bit = std::uint64_t(1) << i;
    if (pos_ & bit) return 1;
    if (neg_ & bit) return -1;
    return 0;
}

unsigned SignVector::support_size() const {
    return static_cast<unsigned>(std::popcount(support()));
}

SignVector SignVector::compose(const SignVector& other) const {
    if (n_ != other.n_) throw DimensionError("composition over different ground sets");
    std::uint64_t free = ~support();
    return SignVector(n_, pos_ | (other.pos_ & free), neg_ | (other.neg_ & free));
}

bool SignVector::is_face_of(const SignVector& other) const {
    return compose(other) == other;
}

std::uint64_t SignVector::separation(const SignVector& other) const {
    if (n_ != other.n_) throw DimensionError("separation over different ground sets");
    return (pos_ & other.neg_) | (neg_ & other.pos_);
}

bool SignVector::conforms_to(const SignVector& other) const {
    if (n_ != other.n_) throw DimensionError("conformality over different ground sets");
    return (pos_ & other.neg_) == 0 && (neg_ & other.pos_) == 0 && (support() & other.zero_set()) == 0;
}

SignVector SignVector::restrict_to(const std::vector<unsigned>& keep) const {
    std::uint64_t pos = 0, neg = 0;
    for (unsigned j = 0; j < keep.size(); ++j) {
        int s = sign(keep[j]);
        if (s > 0) pos |= std::uint64_t(1) << j;
        if (s < 0) neg |= std::uint64_t(1) << j;
    }
    return SignVector(static_cast<unsigned>(keep.size()), pos, neg);
}

SignVector SignVector::append(int sgn) const {
    std::uint64_t bit = std::uint64_t(1) << n_;
    return SignVector(n_ + 1, pos_ | (sgn > 0 ? bit : 0), neg_ | (sgn < 0 ? bit : 0));
}

SignVector SignVector::flip(std::uint64_t mask) const {
    mask &= full_mask(n_);
    std::uint64_t p = (pos_ & ~mask) | (neg_ & mask);
    std::uint64_t q = (neg_ & ~mask) | (pos_ & mask);
    return SignVector(n_, p, q);
}

std::string SignVector::str() const {
    std::string s(n_, '0');
    for (unsigned i = 0; i < n_; ++i) {
        int v = sign(i);
        if (v > 0) s[i] = '+';
        if (v < 0) s[i] = '-';
    }
    return s;
}

bool trit_less(const SignVector& a, const SignVector& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (unsigned i = 0; i < a.size(); ++i) {
        int ra = a.sign(i) > 0 ? 0 : (a.sign(i) < 0 ? 1 : 2);
        int rb = b.sign(i) > 0 ? 0 : (b.sign(i) < 0 ? 1 : 2);
        if (ra != rb) return ra < rb;
    }
    return false;
}

bool tope_lex_less(const SignVector& a, const SignVector& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (unsigned i = 0; i < a.size(); ++i) {
        int ra = a.sign(i) < 0 ? 1 : 0;
        int rb = b.sign(i) < 0 ? 1 : 0;
        if (ra != rb) return ra < rb;
    }
    return false;
}

} // namespace omcat

#include "naxes/scalar.hpp"

#include <cctype>

namespace naxes {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic Miller-Rabin bases for 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldTag FieldTag::prime(std::uint64_t p) {
    if (p == 2) throw FieldError("characteristic 2 is not supported");
    if (!is_prime_u64(p)) throw FieldError("not a prime: " + std::to_string(p));
    if (p < 11) throw FieldError("prime field too small: need p >= 11, got " + std::to_string(p));
    if (p >= (1ull << 62)) throw FieldError("prime too large: need p < 2^62");
    return FieldTag(p);
}

std::string FieldTag::str() const {
    return is_rational() ? std::string("rational") : "GF(" + std::to_string(p_) + ")";
}

void require_same_field(const FieldTag& a, const FieldTag& b) {
    if (a != b) throw FieldError("mixed field arithmetic: " + a.str() + " vs " + b.str());
}

Scalar::Scalar(const FieldTag& tag) : tag_(tag), v_(mpq_class(0)) {
    if (!tag.is_rational()) v_ = std::uint64_t{0};
}

Scalar Scalar::from_int(const FieldTag& tag, long value) {
    if (tag.is_rational()) return Scalar(tag, mpq_class(value));
    std::uint64_t p = tag.characteristic();
    long m = value % static_cast<long>(p);
    if (m < 0) m += static_cast<long>(p);
    return Scalar(tag, static_cast<std::uint64_t>(m));
}

Scalar Scalar::from_rational(mpq_class q) {
    q.canonicalize();
    return Scalar(FieldTag::rationals(), std::move(q));
}

Scalar Scalar::from_string(const FieldTag& tag, const std::string& text) {
    // Strict grammar: -?digits(/digits)?   No whitespace, no decimals.
    auto bad = [&]() -> ParseError {
        return ParseError("malformed scalar \"" + text + "\": expected \"num\" or \"num/den\"");
    };
    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
        ++digits;
    }
    if (digits == 0) throw bad();
    std::string num = text.substr(0, i);
    std::string den = "1";
    if (i < text.size()) {
        if (text[i] != '/') throw bad();
        ++i;
        std::size_t j = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == j || i != text.size()) throw bad();
        den = text.substr(j);
    }
    mpz_class n(num), d(den);
    if (d == 0) throw ParseError("malformed scalar \"" + text + "\": division by zero");
    if (tag.is_rational()) {
        mpq_class q(n, d);
        q.canonicalize();
        return Scalar(tag, std::move(q));
    }
    std::uint64_t p = tag.characteristic();
    std::uint64_t np = mpz_fdiv_ui(n.get_mpz_t(), p);
    std::uint64_t dp = mpz_fdiv_ui(d.get_mpz_t(), p);
    if (dp == 0) throw ParseError("malformed scalar \"" + text + "\": denominator divisible by " + std::to_string(p));
    return Scalar(tag, mulmod(np, powmod(dp, p - 2, p), p));
}

bool Scalar::is_zero() const {
    if (tag_.is_rational()) return sgn(std::get<mpq_class>(v_)) == 0;
    return std::get<std::uint64_t>(v_) == 0;
}

bool Scalar::is_one() const {
    if (tag_.is_rational()) return std::get<mpq_class>(v_) == 1;
    return std::get<std::uint64_t>(v_) == 1;
}

Scalar Scalar::operator-() const {
    if (tag_.is_rational()) return Scalar(tag_, mpq_class(-std::get<mpq_class>(v_)));
    std::uint64_t r = std::get<std::uint64_t>(v_);
    return Scalar(tag_, r == 0 ? 0 : tag_.characteristic() - r);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(tag_, o.tag_);
    if (tag_.is_rational()) {
        std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
    } else {
        std::uint64_t p = tag_.characteristic();
        std::uint64_t s = std::get<std::uint64_t>(v_) + std::get<std::uint64_t>(o.v_);
        if (s >= p) s -= p;
        v_ = s;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_field(tag_, o.tag_);
    if (tag_.is_rational()) {
        std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
    } else {
        std::uint64_t p = tag_.characteristic();
        std::uint64_t a = std::get<std::uint64_t>(v_);
        std::uint64_t b = std::get<std::uint64_t>(o.v_);
        v_ = a >= b ? a - b : a + (p - b);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(tag_, o.tag_);
    if (tag_.is_rational()) {
        std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
    } else {
        v_ = mulmod(std::get<std::uint64_t>(v_), std::get<std::uint64_t>(o.v_), tag_.characteristic());
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_field(tag_, o.tag_);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    require_same_field(a.tag_, b.tag_);
    if (a.tag_.is_rational()) return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
    return std::get<std::uint64_t>(a.v_) == std::get<std::uint64_t>(b.v_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    if (tag_.is_rational()) return Scalar(tag_, mpq_class(1 / std::get<mpq_class>(v_)));
    std::uint64_t p = tag_.characteristic();
    return Scalar(tag_, powmod(std::get<std::uint64_t>(v_), p - 2, p));
}

std::string Scalar::str() const {
    if (tag_.is_rational()) return std::get<mpq_class>(v_).get_str();
    return std::to_string(std::get<std::uint64_t>(v_));
}

const mpq_class& Scalar::rational() const {
    if (!tag_.is_rational()) throw FieldError("not a rational value");
    return std::get<mpq_class>(v_);
}

double Scalar::to_double() const {
    return rational().get_d();
}

std::uint64_t Scalar::residue() const {
    if (tag_.is_rational()) throw FieldError("not a prime field value");
    return std::get<std::uint64_t>(v_);
}

Scalar Scalar::reduced(const FieldTag& target) const {
    if (target.is_rational()) {
        if (!tag_.is_rational()) throw FieldError("cannot lift a residue to the rationals");
        return *this;
    }
    if (!tag_.is_rational()) {
        require_same_field(tag_, target);
        return *this;
    }
    const mpq_class& q = std::get<mpq_class>(v_);
    std::uint64_t p = target.characteristic();
    std::uint64_t np = mpz_fdiv_ui(q.get_num().get_mpz_t(), p);
    std::uint64_t dp = mpz_fdiv_ui(q.get_den().get_mpz_t(), p);
    if (dp == 0) throw MathError("denominator divisible by " + std::to_string(p));
    return Scalar(target, mulmod(np, powmod(dp, p - 2, p), p));
}

std::size_t Scalar::hash() const {
    std::size_t h = std::hash<std::uint64_t>{}(tag_.characteristic());
    h ^= std::hash<std::string>{}(str()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

} // namespace naxes

#include "rigidkit/functional.hpp"

#include <optional>
#include <sstream>

#include "rigidkit/errors.hpp"

namespace rigidkit {

Functional Functional::operator+(const Functional& o) const {
    if (coords_.size() != o.coords_.size()) throw DimensionMismatch("functional add");
    QVector r = coords_;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.coords_[i];
    return Functional(std::move(r));
}

Functional Functional::operator-(const Functional& o) const {
    if (coords_.size() != o.coords_.size()) throw DimensionMismatch("functional sub");
    QVector r = coords_;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= o.coords_[i];
    return Functional(std::move(r));
}

Functional Functional::operator-() const {
    QVector r = coords_;
    for (auto& x : r) x = -x;
    return Functional(std::move(r));
}

Functional Functional::scaled(const Rational& s) const {
    QVector r = coords_;
    for (auto& x : r) x *= s;
    return Functional(std::move(r));
}

bool Functional::operator<(const Functional& o) const {
    if (coords_.size() != o.coords_.size()) return coords_.size() < o.coords_.size();
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] < o.coords_[i]) return true;
        if (o.coords_[i] < coords_[i]) return false;
    }
    return false;
}

std::vector<Integer> Functional::rayKey() const {
    Integer den(1);
    for (const auto& x : coords_)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
    std::vector<Integer> key;
    key.reserve(coords_.size());
    Integer g(0);
    for (const auto& x : coords_) {
        Integer v = x.get_num() * (den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        key.push_back(std::move(v));
    }
    if (g != 0)
        for (auto& v : key) v /= g;
    return key;
}

std::vector<Integer> Functional::lineKey() const {
    auto key = rayKey();
    for (const auto& v : key) {
        if (v == 0) continue;
        if (v < 0)
            for (auto& w : key) w = -w;
        break;
    }
    return key;
}

namespace {
std::string keyToString(const std::vector<Integer>& key) {
    std::ostringstream os;
    for (std::size_t i = 0; i < key.size(); ++i)
        os << key[i].get_str() << (i + 1 < key.size() ? "," : "");
    return os.str();
}
} // namespace

std::string Functional::rayKeyString() const { return keyToString(rayKey()); }

std::string Functional::lineKeyString() const { return keyToString(lineKey()); }

std::string Functional::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i)
        os << toString(coords_[i]) << (i + 1 < coords_.size() ? "," : "");
    os << ")";
    return os.str();
}

std::optional<Rational> Functional::proportionalityFactor(const Functional& a, const Functional& b) {
    if (a.rank() != b.rank() || a.isZero() || b.isZero()) return std::nullopt;
    std::optional<Rational> k;
    for (std::size_t i = 0; i < a.rank(); ++i) {
        const Rational& x = a.coords_[i];
        const Rational& y = b.coords_[i];
        if (y == 0) {
            if (x != 0) return std::nullopt;
            continue;
        }
        Rational f = x / y;
        if (!k)
            k = f;
        else if (*k != f)
            return std::nullopt;
    }
    if (!k || *k == 0) return std::nullopt;
    return k;
}

bool Functional::proportional(const Functional& a, const Functional& b) {
    if (a.isZero() && b.isZero()) return true;
    if (a.isZero() || b.isZero()) return false;
    return proportionalityFactor(a, b).has_value();
}

bool Functional::positivelyProportional(const Functional& a, const Functional& b) {
    auto k = proportionalityFactor(a, b);
    return k && *k > 0;
}

bool Functional::negativelyProportional(const Functional& a, const Functional& b) {
    auto k = proportionalityFactor(a, b);
    return k && *k < 0;
}

} // namespace rigidkit

#ifndef RIGIDKIT_FUNCTIONAL_HPP
#define RIGIDKIT_FUNCTIONAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "rigidkit/rational.hpp"

namespace rigidkit {

// A linear functional on the acting abelian subalgebra, stored as its value
// on each generator. The ray key is the canonical positive-ray
// representative: coprime integer entries, first nonzero entry positive.
class Functional {
public:
    Functional() = default;
    explicit Functional(QVector coords) : coords_(std::move(coords)) {}

    const QVector& coords() const { return coords_; }
    std::size_t rank() const { return coords_.size(); }
    bool isZero() const { return isZeroVector(coords_); }

    Functional operator+(const Functional& o) const;
    Functional operator-(const Functional& o) const;
    Functional operator-() const;
    Functional scaled(const Rational& s) const;

    bool operator==(const Functional& o) const { return coords_ == o.coords_; }
    bool operator!=(const Functional& o) const { return coords_ != o.coords_; }
    bool operator<(const Functional& o) const;   // lexicographic, for maps

    // Positive-ray representative: coprime integer entries, positive
    // scaling only (so mu and -mu get different keys).
    std::vector<Integer> rayKey() const;
    std::string rayKeyString() const;
    // Line representative: ray key further normalized so the first nonzero
    // entry is positive; identifies {mu, -mu} (kernel hyperplanes).
    std::vector<Integer> lineKey() const;
    std::string lineKeyString() const;
    std::string str() const;

    // a = k b for some k != 0, or both zero.
    static bool proportional(const Functional& a, const Functional& b);
    // a = k b with k > 0 (both nonzero).
    static bool positivelyProportional(const Functional& a, const Functional& b);
    // a = k b with k < 0 (both nonzero).
    static bool negativelyProportional(const Functional& a, const Functional& b);
    // The factor k with a = k b, if it exists and both are nonzero.
    static std::optional<Rational> proportionalityFactor(const Functional& a, const Functional& b);

private:
    QVector coords_;
};

} // namespace rigidkit

#endif

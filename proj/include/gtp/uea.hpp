#pragma once

#include "gtp/liealg.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gtp {

// Standard monomial stored as its nondecreasing list of generator indices.
using Mono = std::vector<std::uint8_t>;

class UEAElement {
public:
    using Terms = std::map<Mono, Rational>;

    UEAElement() = default;
    static UEAElement scalar(const Rational& c);
    static UEAElement monomial(const Mono& m, const Rational& c = Rational(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rational coeff(const Mono& m) const;
    void add_term(const Mono& m, const Rational& c);

    UEAElement operator-() const;
    UEAElement& operator+=(const UEAElement& o);
    UEAElement& operator-=(const UEAElement& o);
    UEAElement& operator*=(const Rational& c);
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    friend UEAElement operator*(UEAElement a, const Rational& c) { return a *= c; }
    friend UEAElement operator*(const Rational& c, UEAElement a) { return a *= c; }
    friend bool operator==(const UEAElement& a, const UEAElement& b) { return a.terms_ == b.terms_; }

    // Terms of the given degree only.
    UEAElement homogeneous_part(int degree) const;

private:
    Terms terms_;
};

int mono_degree(const Mono& m);

// U(g) with PBW straightening; multiplication is thread safe.
class UEA {
public:
    explicit UEA(const ChevalleyAlgebra& g);
    UEA(const UEA&) = delete;
    UEA& operator=(const UEA&) = delete;

    const ChevalleyAlgebra& lie() const { return g_; }

    UEAElement unit() const { return UEAElement::scalar(Rational(1)); }
    UEAElement gen(int index) const;
    UEAElement gen(std::string_view label) const;
    // Cartan element by label, including aliases such as G2's h31.
    UEAElement cartan(std::string_view label) const;

    UEAElement multiply(const UEAElement& a, const UEAElement& b) const;
    UEAElement mul_gen(const UEAElement& a, int x) const;
    UEAElement commutator(const UEAElement& a, const UEAElement& b) const;
    UEAElement power(const UEAElement& a, unsigned e) const;

    // Product of the letters in order, straightened.
    UEAElement word_to_element(const std::vector<int>& letters) const;
    // Space separated labels; "e10^2" repeats a letter.
    UEAElement word_to_element(std::string_view word) const;
    std::vector<int> parse_word(std::string_view word) const;

    // nullopt when terms carry different weights.
    std::optional<Root> weight_of(const UEAElement& x) const;
    Root mono_weight(const Mono& m) const;
    int degree_of(const UEAElement& x) const;

    std::string mono_str(const Mono& m) const;
    std::string str(const UEAElement& x) const;

    std::size_t memo_size() const;

private:
    using ElemPtr = std::shared_ptr<const UEAElement>;
    ElemPtr mono_times_gen(const Mono& m, int x) const;

    const ChevalleyAlgebra& g_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::string, ElemPtr> memo_;
};

const UEA& uea(AlgebraId id);

}  // namespace gtp

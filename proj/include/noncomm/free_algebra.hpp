#pragma once

#include "noncomm/rational.hpp"
#include "noncomm/word.hpp"

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

namespace noncomm {

/// Formal integer combination of words in the free algebra on L0 = A, L1 = B.
/// No zero coefficient is ever stored, so map equality is element equality.
class FreeElement {
public:
    using Terms = std::map<Word, BigInt>;

    FreeElement() = default;

    static FreeElement word(const Word& w, const BigInt& coefficient = 1);
    static FreeElement identity() { return word(Word{}); }
    static FreeElement generator_l0();
    static FreeElement generator_l1();

    /// Text form: terms like "AB", "-3*BA", "I" (empty word); "0" for zero.
    /// Terms are joined with " + " / " - " in shortlex order.
    static FreeElement parse(std::string_view text);
    std::string str() const;

    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Zero when the word is absent.
    BigInt coefficient(const Word& w) const;

    FreeElement& operator+=(const FreeElement& other);
    friend FreeElement operator+(FreeElement lhs, const FreeElement& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend FreeElement operator*(const FreeElement& lhs, const FreeElement& rhs);
    friend bool operator==(const FreeElement&, const FreeElement&) = default;

    friend std::ostream& operator<<(std::ostream& os, const FreeElement& e) { return os << e.str(); }

private:
    void accumulate(const Word& w, const BigInt& c);

    Terms terms_;
};

inline FreeElement zero_like(const FreeElement&) { return FreeElement{}; }
inline FreeElement identity_like(const FreeElement&) { return FreeElement::identity(); }
inline bool compatible(const FreeElement&, const FreeElement&) { return true; }

/// Element of the free left module generated by the formal vector y1:
/// the combination sum c_w * w applied to y1.
class FreeVector {
public:
    FreeVector() = default;
    explicit FreeVector(FreeElement combination) : combination_(std::move(combination)) {}

    /// The generator y1 itself.
    static FreeVector generator() { return FreeVector(FreeElement::identity()); }

    const FreeElement& combination() const noexcept { return combination_; }

    /// Text form: "A·y1 + BB·y1", "y1", "0".
    std::string str() const;
    /// Accepts the output of str() (the "·" may also be written "*").
    static FreeVector parse(std::string_view text);

    friend FreeVector operator+(const FreeVector& a, const FreeVector& b) {
        return FreeVector(a.combination_ + b.combination_);
    }
    friend FreeVector operator*(const FreeElement& op, const FreeVector& y) {
        return FreeVector(op * y.combination_);
    }
    friend bool operator==(const FreeVector&, const FreeVector&) = default;

    friend std::ostream& operator<<(std::ostream& os, const FreeVector& v) { return os << v.str(); }

private:
    FreeElement combination_;
};

inline FreeVector zero_like(const FreeVector&) { return FreeVector{}; }
inline bool compatible(const FreeElement&, const FreeVector&) { return true; }

}  // namespace noncomm

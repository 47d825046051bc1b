#include "noncomm/free_algebra.hpp"

#include "noncomm/error.hpp"

#include <cctype>

namespace noncomm {

namespace {

constexpr std::string_view middle_dot = "\xC2\xB7";

// Parses sums of terms "[+-] [k*] word" where word is A/B letters or I. With
// vector_form each term must end in the generator "y1", joined by "·" or "*"
// unless the term is a bare (signed, scaled) "y1".
class TermParser {
public:
    TermParser(std::string_view text, bool vector_form) : vector_form_(vector_form) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text.substr(i, middle_dot.size()) == middle_dot) {
                compact_.push_back('*');
                i += middle_dot.size() - 1;
            } else if (std::isspace(static_cast<unsigned char>(text[i]))) {
                // Whitespace may surround operators but never split a token.
                const auto next = text.find_first_not_of(" \t\r\n", i);
                if (!compact_.empty() && next != std::string_view::npos && std::isalnum(static_cast<unsigned char>(compact_.back())) &&
                    std::isalnum(static_cast<unsigned char>(text[next])))
                    compact_.push_back(' ');
            } else {
                compact_.push_back(text[i]);
            }
        }
        source_ = std::string(text);
    }

    FreeElement parse() {
        FreeElement out;
        if (compact_ == "0") return out;
        if (compact_.empty()) fail("empty expression");
        bool first = true;
        while (pos_ < compact_.size()) {
            bool negative = false;
            if (peek() == '+' || peek() == '-') {
                negative = peek() == '-';
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            out += parse_term(negative);
        }
        return out;
    }

private:
    char peek() const { return pos_ < compact_.size() ? compact_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::Parse, "cannot parse free-algebra expression \"" + source_ + "\": " + what +
                                          " at offset " + std::to_string(pos_));
    }

    bool at_generator() const { return compact_.compare(pos_, 2, "y1") == 0; }

    FreeElement parse_term(bool negative) {
        BigInt coefficient = 1;
        bool have_coefficient = false;
        const std::size_t digits_begin = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ > digits_begin) {
            coefficient = BigInt(compact_.substr(digits_begin, pos_ - digits_begin), 10);
            have_coefficient = true;
            if (peek() == '*') {
                ++pos_;
            } else if (!vector_form_ && (peek() == '\0' || peek() == '+' || peek() == '-')) {
                return FreeElement::word(Word{}, negative ? BigInt(-coefficient) : coefficient);
            } else {
                fail("expected '*' after coefficient");
            }
        }

        Word word;
        if (vector_form_ && at_generator()) {
            pos_ += 2;
        } else {
            if (peek() == 'I') {
                ++pos_;
            } else {
                const std::size_t begin = pos_;
                while (peek() == 'A' || peek() == 'B') ++pos_;
                if (pos_ == begin) fail(have_coefficient ? "expected a word after '*'" : "expected a term");
                word = Word::parse(std::string_view(compact_).substr(begin, pos_ - begin));
            }
            if (vector_form_) {
                if (peek() != '*') fail("expected the generator y1");
                ++pos_;
                if (!at_generator()) fail("expected the generator y1");
                pos_ += 2;
            }
        }
        if (coefficient == 0) fail("zero coefficient");
        return FreeElement::word(word, negative ? BigInt(-coefficient) : coefficient);
    }

    bool vector_form_;
    std::string compact_;
    std::string source_;
    std::size_t pos_ = 0;
};

// Joins terms as "t1 + t2 - t3"; render(word) gives the unsigned body of a term.
template <class Render>
std::string render_terms(const FreeElement::Terms& terms, Render render) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [word, coefficient] : terms) {
        const bool negative = sgn(coefficient) < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const BigInt magnitude = abs(coefficient);
        out += render(word, magnitude);
    }
    return out;
}

}  // namespace

FreeElement FreeElement::word(const Word& w, const BigInt& coefficient) {
    FreeElement e;
    e.accumulate(w, coefficient);
    return e;
}

FreeElement FreeElement::generator_l0() { return word(Word::parse("A")); }
FreeElement FreeElement::generator_l1() { return word(Word::parse("B")); }

FreeElement FreeElement::parse(std::string_view text) { return TermParser(text, false).parse(); }

std::string FreeElement::str() const {
    return render_terms(terms_, [](const Word& w, const BigInt& magnitude) {
        const std::string body = w.empty() ? "I" : w.str();
        if (magnitude == 1) return body;
        if (w.empty()) return to_string(magnitude);
        return to_string(magnitude) + "*" + body;
    });
}

BigInt FreeElement::coefficient(const Word& w) const {
    const auto it = terms_.find(w);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void FreeElement::accumulate(const Word& w, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

FreeElement& FreeElement::operator+=(const FreeElement& other) {
    for (const auto& [w, c] : other.terms_) accumulate(w, c);
    return *this;
}

FreeElement operator*(const FreeElement& lhs, const FreeElement& rhs) {
    FreeElement out;
    for (const auto& [wl, cl] : lhs.terms_)
        for (const auto& [wr, cr] : rhs.terms_) out.accumulate(wl + wr, cl * cr);
    return out;
}

std::string FreeVector::str() const {
    return render_terms(combination_.terms(), [](const Word& w, const BigInt& magnitude) {
        std::string body = w.empty() ? std::string("y1") : w.str() + std::string(middle_dot) + "y1";
        if (magnitude == 1) return body;
        return to_string(magnitude) + "*" + body;
    });
}

FreeVector FreeVector::parse(std::string_view text) { return FreeVector(TermParser(text, true).parse()); }

}  // namespace noncomm

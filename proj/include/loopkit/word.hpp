#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "loopkit/rational.hpp"

namespace loopkit {

// Zero-based letter index; u_{i+1} in printed output.
using Letter = std::uint8_t;

class Word {
public:
    Word() = default;
    Word(std::initializer_list<Letter> letters) : letters_(letters) {}
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t k) const { return letters_[k]; }
    std::span<const Letter> letters() const noexcept { return letters_; }

    void push_back(Letter a) { letters_.push_back(a); }
    void pop_back() { letters_.pop_back(); }
    Word subword(std::size_t pos, std::size_t len) const;
    // True if (a, b) occurs as a contiguous factor.
    bool contains_pair(Letter a, Letter b) const;

    friend Word operator+(const Word &a, const Word &b);
    // Raw comparison by letter index; used only as a container key.
    friend auto operator<=>(const Word &, const Word &) = default;
    friend bool operator==(const Word &, const Word &) = default;

private:
    std::vector<Letter> letters_;
};

struct WordHash {
    std::size_t operator()(const Word &w) const noexcept;
};

// Letters u_1..u_r with positive loop degrees and a total order used for
// every lexicographic comparison.
class Alphabet {
public:
    explicit Alphabet(std::vector<int> loop_degrees);
    // `ascending` lists the letters from smallest to largest.
    Alphabet(std::vector<int> loop_degrees, std::vector<Letter> ascending);

    std::size_t size() const noexcept { return degrees_.size(); }
    int degree(Letter a) const { return degrees_.at(a); }
    int degree(const Word &w) const;
    std::span<const int> degrees() const noexcept { return degrees_; }
    int rank(Letter a) const { return ranks_.at(a); }
    std::span<const Letter> order() const noexcept { return order_; }

    // Lexicographic under the letter order; a proper prefix is smaller.
    bool lex_less(const Word &a, const Word &b) const;
    // Loop degree first, then lexicographic.
    bool deglex_less(const Word &a, const Word &b) const;

    friend bool operator==(const Alphabet &, const Alphabet &) = default;

private:
    std::vector<int> degrees_;
    std::vector<Letter> order_;
    std::vector<int> ranks_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

std::string letter_name(Letter a);
std::string to_string(const Word &w);

// Finite linear combination of words over an alphabet. Zero coefficients are
// never stored, so equality of elements is equality of term maps.
class AlgebraElement {
public:
    using Terms = std::map<Word, Rational>;

    explicit AlgebraElement(AlphabetRef alphabet);
    static AlgebraElement word(AlphabetRef alphabet, Word w, const Rational &coef = 1);
    static AlgebraElement letter(AlphabetRef alphabet, Letter a);

    const AlphabetRef &alphabet() const noexcept { return alphabet_; }
    const Terms &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    Rational coefficient(const Word &w) const;

    void add(const Word &w, const Rational &coef);
    AlgebraElement &operator+=(const AlgebraElement &other);
    AlgebraElement &operator-=(const AlgebraElement &other);
    AlgebraElement &operator*=(const Rational &scalar);

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement &b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement &b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational &s) { return a *= s; }
    friend bool operator==(const AlgebraElement &a, const AlgebraElement &b);

    // Loop degree if every word has the same one; -1 for mixed, 0 for zero.
    int homogeneous_degree() const;

    // Terms printed in descending deg-lex order, e.g. "u1 u2 - u2 u1".
    std::string to_string() const;

private:
    void check_same_alphabet(const AlgebraElement &other) const;

    AlphabetRef alphabet_;
    Terms terms_;
};

// Concatenation product extended bilinearly.
AlgebraElement multiply(const AlgebraElement &a, const AlgebraElement &b);

// All words of loop degree m, in lexicographic order under the alphabet order
// (deg-lex, since the degree is fixed). m = 0 gives the empty word.
std::vector<Word> enumerate_words(const Alphabet &alphabet, int m);

// Number of words of loop degree m, without enumerating them.
Integer count_words(const Alphabet &alphabet, int m);

// Binary bracket tree over letters. Immutable; subtrees are shared.
class BracketTree {
public:
    static BracketTree leaf(Letter a);
    static BracketTree node(BracketTree left, BracketTree right);

    bool is_leaf() const noexcept { return !left_; }
    Letter letter() const;
    const BracketTree &left() const;
    const BracketTree &right() const;

    int loop_degree(const Alphabet &alphabet) const;
    // Leaves from left to right.
    Word foliage() const;
    std::string to_string() const;

    friend bool operator==(const BracketTree &a, const BracketTree &b);

private:
    BracketTree() = default;

    Letter letter_ = 0;
    std::shared_ptr<const BracketTree> left_;
    std::shared_ptr<const BracketTree> right_;
};

// [a, b] = ab - ba.
AlgebraElement expand_bracket_ungraded(const AlphabetRef &alphabet, const BracketTree &t);

// [a, b] = ab - (-1)^{|a||b|} ba with loop degrees.
AlgebraElement expand_bracket_graded(const AlphabetRef &alphabet, const BracketTree &t);

} // namespace loopkit

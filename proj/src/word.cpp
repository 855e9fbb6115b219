#include "loopkit/word.hpp"

#include <algorithm>
#include <numeric>

#include "loopkit/errors.hpp"

namespace loopkit {

Word Word::subword(std::size_t pos, std::size_t len) const
{
    return Word(std::vector<Letter>(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

bool Word::contains_pair(Letter a, Letter b) const
{
    for (std::size_t k = 0; k + 1 < letters_.size(); ++k)
        if (letters_[k] == a && letters_[k + 1] == b)
            return true;
    return false;
}

Word operator+(const Word &a, const Word &b)
{
    std::vector<Letter> out;
    out.reserve(a.length() + b.length());
    out.insert(out.end(), a.letters_.begin(), a.letters_.end());
    out.insert(out.end(), b.letters_.begin(), b.letters_.end());
    return Word(std::move(out));
}

std::size_t WordHash::operator()(const Word &w) const noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (Letter a : w.letters()) {
        h ^= a + 1u;
        h *= 1099511628211ull;
    }
    return h ^ w.length();
}

namespace {

std::vector<Letter> identity_order(std::size_t r)
{
    std::vector<Letter> order(r);
    std::iota(order.begin(), order.end(), Letter{0});
    return order;
}

} // namespace

Alphabet::Alphabet(std::vector<int> loop_degrees)
    : Alphabet(loop_degrees, identity_order(loop_degrees.size()))
{
}

Alphabet::Alphabet(std::vector<int> loop_degrees, std::vector<Letter> ascending)
    : degrees_(std::move(loop_degrees)), order_(std::move(ascending))
{
    if (degrees_.empty())
        throw DomainError("an alphabet needs at least one letter");
    if (degrees_.size() > 255)
        throw DomainError("alphabets are limited to 255 letters");
    for (int deg : degrees_)
        if (deg < 1)
            throw DomainError("loop degrees must be positive");
    if (order_.size() != degrees_.size())
        throw UsageError("letter order must list every letter exactly once");
    ranks_.assign(degrees_.size(), -1);
    for (std::size_t k = 0; k < order_.size(); ++k) {
        const Letter a = order_[k];
        if (a >= degrees_.size() || ranks_[a] != -1)
            throw UsageError("letter order must be a permutation of the letters");
        ranks_[a] = static_cast<int>(k);
    }
}

int Alphabet::degree(const Word &w) const
{
    int total = 0;
    for (Letter a : w.letters())
        total += degrees_.at(a);
    return total;
}

bool Alphabet::lex_less(const Word &a, const Word &b) const
{
    const std::size_t n = std::min(a.length(), b.length());
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k] != b[k])
            return ranks_[a[k]] < ranks_[b[k]];
    }
    return a.length() < b.length();
}

bool Alphabet::deglex_less(const Word &a, const Word &b) const
{
    const int da = degree(a), db = degree(b);
    if (da != db)
        return da < db;
    return lex_less(a, b);
}

std::string letter_name(Letter a) { return "u" + std::to_string(static_cast<int>(a) + 1); }

std::string to_string(const Word &w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (std::size_t k = 0; k < w.length(); ++k) {
        if (k > 0)
            s += ' ';
        s += letter_name(w[k]);
    }
    return s;
}

AlgebraElement::AlgebraElement(AlphabetRef alphabet) : alphabet_(std::move(alphabet))
{
    if (!alphabet_)
        throw UsageError("algebra element without an alphabet");
}

AlgebraElement AlgebraElement::word(AlphabetRef alphabet, Word w, const Rational &coef)
{
    AlgebraElement x(std::move(alphabet));
    x.add(w, coef);
    return x;
}

AlgebraElement AlgebraElement::letter(AlphabetRef alphabet, Letter a)
{
    return word(std::move(alphabet), Word{a});
}

Rational AlgebraElement::coefficient(const Word &w) const
{
    const auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add(const Word &w, const Rational &coef)
{
    if (coef == 0)
        return;
    for (Letter a : w.letters())
        if (a >= alphabet_->size())
            throw UsageError("word uses a letter outside the alphabet");
    auto [it, inserted] = terms_.try_emplace(w, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void AlgebraElement::check_same_alphabet(const AlgebraElement &other) const
{
    if (alphabet_ != other.alphabet_ && !(*alphabet_ == *other.alphabet_))
        throw UsageError("algebra elements over different alphabets");
}

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &other)
{
    check_same_alphabet(other);
    for (const auto &[w, c] : other.terms_)
        add(w, c);
    return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &other)
{
    check_same_alphabet(other);
    for (const auto &[w, c] : other.terms_)
        add(w, -c);
    return *this;
}

AlgebraElement &AlgebraElement::operator*=(const Rational &scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &[w, c] : terms_)
        c *= scalar;
    return *this;
}

bool operator==(const AlgebraElement &a, const AlgebraElement &b)
{
    return *a.alphabet_ == *b.alphabet_ && a.terms_ == b.terms_;
}

int AlgebraElement::homogeneous_degree() const
{
    int deg = 0;
    bool first = true;
    for (const auto &[w, c] : terms_) {
        const int dw = alphabet_->degree(w);
        if (first) {
            deg = dw;
            first = false;
        } else if (dw != deg) {
            return -1;
        }
    }
    return deg;
}

std::string AlgebraElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::vector<const Terms::value_type *> sorted;
    sorted.reserve(terms_.size());
    for (const auto &term : terms_)
        sorted.push_back(&term);
    std::sort(sorted.begin(), sorted.end(), [this](auto *x, auto *y) {
        return alphabet_->deglex_less(y->first, x->first);
    });
    std::string s;
    bool first = true;
    for (const auto *term : sorted) {
        Rational c = term->second;
        if (first) {
            if (c < 0) {
                s += "-";
                c = -c;
            }
        } else {
            s += c < 0 ? " - " : " + ";
            if (c < 0)
                c = -c;
        }
        if (c != 1)
            s += loopkit::to_string(c) + " ";
        s += loopkit::to_string(term->first);
        first = false;
    }
    return s;
}

AlgebraElement multiply(const AlgebraElement &a, const AlgebraElement &b)
{
    if (a.alphabet() != b.alphabet() && !(*a.alphabet() == *b.alphabet()))
        throw UsageError("multiply: operands live over different alphabets");
    AlgebraElement out(a.alphabet());
    for (const auto &[wa, ca] : a.terms())
        for (const auto &[wb, cb] : b.terms())
            out.add(wa + wb, ca * cb);
    return out;
}

namespace {

void enumerate_rec(const Alphabet &alphabet, int remaining, Word &prefix, std::vector<Word> &out)
{
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (Letter a : alphabet.order()) {
        const int deg = alphabet.degree(a);
        if (deg > remaining)
            continue;
        prefix.push_back(a);
        enumerate_rec(alphabet, remaining - deg, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Word> enumerate_words(const Alphabet &alphabet, int m)
{
    if (m < 0)
        throw DomainError("enumerate_words: negative degree");
    std::vector<Word> out;
    Word prefix;
    enumerate_rec(alphabet, m, prefix, out);
    return out;
}

Integer count_words(const Alphabet &alphabet, int m)
{
    if (m < 0)
        throw DomainError("count_words: negative degree");
    std::vector<Integer> c(static_cast<std::size_t>(m) + 1);
    c[0] = 1;
    for (int k = 1; k <= m; ++k)
        for (int deg : alphabet.degrees())
            if (deg <= k)
                c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - deg)];
    return c[static_cast<std::size_t>(m)];
}

BracketTree BracketTree::leaf(Letter a)
{
    BracketTree t;
    t.letter_ = a;
    return t;
}

BracketTree BracketTree::node(BracketTree left, BracketTree right)
{
    BracketTree t;
    t.left_ = std::make_shared<const BracketTree>(std::move(left));
    t.right_ = std::make_shared<const BracketTree>(std::move(right));
    return t;
}

Letter BracketTree::letter() const
{
    if (!is_leaf())
        throw UsageError("BracketTree::letter on an internal node");
    return letter_;
}

const BracketTree &BracketTree::left() const
{
    if (is_leaf())
        throw UsageError("BracketTree::left on a leaf");
    return *left_;
}

const BracketTree &BracketTree::right() const
{
    if (is_leaf())
        throw UsageError("BracketTree::right on a leaf");
    return *right_;
}

int BracketTree::loop_degree(const Alphabet &alphabet) const
{
    return is_leaf() ? alphabet.degree(letter_)
                     : left_->loop_degree(alphabet) + right_->loop_degree(alphabet);
}

Word BracketTree::foliage() const
{
    return is_leaf() ? Word{letter_} : left_->foliage() + right_->foliage();
}

std::string BracketTree::to_string() const
{
    if (is_leaf())
        return letter_name(letter_);
    return "[" + left_->to_string() + "," + right_->to_string() + "]";
}

bool operator==(const BracketTree &a, const BracketTree &b)
{
    if (a.is_leaf() || b.is_leaf())
        return a.is_leaf() && b.is_leaf() && a.letter_ == b.letter_;
    return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

namespace {

AlgebraElement expand(const AlphabetRef &alphabet, const BracketTree &t, bool graded)
{
    if (t.is_leaf())
        return AlgebraElement::letter(alphabet, t.letter());
    const AlgebraElement a = expand(alphabet, t.left(), graded);
    const AlgebraElement b = expand(alphabet, t.right(), graded);
    AlgebraElement out = multiply(a, b);
    Rational sign = -1;
    if (graded) {
        const long da = t.left().loop_degree(*alphabet);
        const long db = t.right().loop_degree(*alphabet);
        if ((da * db) % 2 != 0)
            sign = 1;
    }
    out += multiply(b, a) * sign;
    return out;
}

} // namespace

AlgebraElement expand_bracket_ungraded(const AlphabetRef &alphabet, const BracketTree &t)
{
    return expand(alphabet, t, false);
}

AlgebraElement expand_bracket_graded(const AlphabetRef &alphabet, const BracketTree &t)
{
    return expand(alphabet, t, true);
}

} // namespace loopkit

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tentweave {

using Word = std::string;

class DomainError : public std::runtime_error {
public:
    DomainError(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

[[noreturn]] void fail(const std::string& kind, const std::string& msg);

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };
enum class Dir { Left, Right };

const char* to_string(Ordering o);
inline int sign(Ordering o) { return static_cast<int>(o); }

// Eventually periodic sequence. Right-infinite: head then period repeated,
// index 1 is head[0]. Left-infinite: written ...PPP H, index 1 is the last
// character of H and indices grow to the left.
struct EPSeq {
    Word head;
    Word period;
    Dir dir = Dir::Right;

    static EPSeq right(Word head, Word period);
    static EPSeq left(Word period, Word head = "");

    char at(std::size_t i) const;
    // s_1..s_n in index order.
    Word first(std::size_t n) const;
    // Left-infinite only: s_n..s_1 as written.
    Word last(std::size_t n) const;
    std::size_t h() const { return head.size(); }
    std::size_t p() const { return period.size(); }

    bool operator==(const EPSeq& o) const = default;
};

// Bi-infinite itinerary written LEFT "." RIGHT. right.at(1) is the symbol of
// the zeroth coordinate, left.at(1) the symbol of the first preimage.
struct PointItinerary {
    EPSeq left;
    EPSeq right;
    bool operator==(const PointItinerary& o) const = default;
};

bool is_binary(const Word& w);
EPSeq canonical(EPSeq s);
Word primitive_root(const Word& w);

EPSeq parse_seq(const std::string& text);
Word parse_word(const std::string& text);
PointItinerary parse_point(const std::string& text);
std::string format(const EPSeq& s);
std::string format(const PointItinerary& p);

bool ones_parity_odd(const Word& w);
int ones(const Word& w);
char flip(char c);

Ordering plex_compare(const Word& s, const Word& t);
Ordering plex_compare(const EPSeq& s, const EPSeq& t);
Ordering plex_compare(const Word& s, const EPSeq& t);
Ordering plex_compare(const EPSeq& s, const Word& t);

EPSeq shift(const EPSeq& s, std::size_t k);
// Left-infinite s followed by the finite word w (w written left to right).
EPSeq append(const EPSeq& s, const Word& w);
// Reverse a right-infinite sequence into a left-infinite one and vice versa.
EPSeq reversed(const EPSeq& s);
Word reversed(const Word& w);

std::size_t lcm(std::size_t a, std::size_t b);

// Kneading sequence: exact eventually periodic or a finite prefix.
class Kneading {
public:
    Kneading() = default;
    static Kneading of(const EPSeq& nu, bool validate = true);
    static Kneading of_prefix(const Word& prefix);
    static Kneading parse(const std::string& text);

    bool exact() const { return seq_.has_value(); }
    const EPSeq& seq() const;
    char c(std::size_t i) const;
    // Number of known symbols; SIZE_MAX when exact.
    std::size_t known() const;
    Word first(std::size_t n) const;
    std::string str() const;

private:
    std::optional<EPSeq> seq_;
    Word prefix_;
};

std::optional<int> kappa(const Kneading& nu);

// Admissibility automaton for exact kneading data. State entry m compares the
// current word (or infinite tail) with sigma^m(nu).
class Automaton {
public:
    using State = std::vector<int8_t>;
    explicit Automaton(const EPSeq& nu);

    State empty() const { return State(n_, 0); }
    State from_right(const EPSeq& r) const;
    bool push(State& st, char x) const;
    bool accepts(char x, const State& st) const;
    std::size_t size() const { return n_; }

private:
    std::size_t sh(std::size_t m) const { return m < n_ ? m : h_ + (m - h_) % p_; }
    EPSeq nu_;
    std::size_t h_, p_, n_;
    Word sym_;
};

bool is_admissible_word(const Word& w, const Kneading& nu);
bool is_admissible_seq(const EPSeq& s, const Kneading& nu);
bool is_admissible_point(const PointItinerary& x, const Kneading& nu);

Kneading kneading_from_slope(double slope, std::size_t depth);

}  // namespace tentweave

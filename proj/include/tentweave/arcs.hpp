#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "tentweave/symbolic.hpp"
#include "tentweave/tent.hpp"

namespace tentweave {

struct Tau {
    enum class Kind { Finite, Infinite, Undefined, AtLeast };
    Kind kind = Kind::Undefined;
    std::size_t n = 0;      // value for Finite, best lower bound for AtLeast
    std::size_t depth = 0;  // kneading symbols used for AtLeast

    static Tau finite(std::size_t n) { return {Kind::Finite, n, 0}; }
    static Tau infinite() { return {Kind::Infinite, 0, 0}; }
    static Tau undefined() { return {Kind::Undefined, 0, 0}; }
    static Tau at_least(std::size_t n, std::size_t d) { return {Kind::AtLeast, n, d}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinite; }
    std::string str() const;
    bool operator==(const Tau&) const = default;
};

// Endpoint of a projection: T^n(c), or the point 0 (only for the all-zero arc).
struct OrbitPoint {
    bool zero = false;
    std::size_t n = 0;
    bool operator==(const OrbitPoint&) const = default;
};

struct BasicArc {
    EPSeq itinerary;
    Tau tau_l;
    Tau tau_r;
    OrbitPoint left;
    OrbitPoint right;
    bool degenerate = false;
    bool provisional = false;
    std::optional<Interval> numeric;
};

Tau tau_L(const EPSeq& s, const Kneading& nu);
Tau tau_R(const EPSeq& s, const Kneading& nu);

// Orders T^a(c) against T^b(c) on the interval (index 0 means the point 0).
Ordering orbit_compare(const OrbitPoint& a, const OrbitPoint& b, const Kneading& nu);

BasicArc projection(const EPSeq& s, const Kneading& nu, std::optional<double> slope = std::nullopt);

EPSeq flip_at(const EPSeq& s, std::size_t k);
EPSeq right_neighbour(const EPSeq& s, const Kneading& nu);
EPSeq left_neighbour(const EPSeq& s, const Kneading& nu);

bool is_endpoint(const PointItinerary& p, const Kneading& nu);

// Index-aligned period block identifying the tail of a left-infinite sequence.
std::pair<std::size_t, Word> tail_key(const EPSeq& s);
bool same_tail(const EPSeq& s, const EPSeq& t);

}  // namespace tentweave

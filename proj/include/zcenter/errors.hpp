#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace zcenter {

// Base class for everything this library throws on bad input or a blown
// precondition. Internal invariant failures use internal_error instead.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

struct not_a_group : error {
    // witness: a triple (a,b,c) with (ab)c != a(bc), or (x,-1,-1) for a
    // missing identity/inverse at x
    std::array<long, 3> witness{-1, -1, -1};
    explicit not_a_group(const std::string& what) : error(what) {}
    not_a_group(const std::string& what, long a, long b, long c)
        : error(what), witness{a, b, c} {}
};

struct order_cap_exceeded : error {
    explicit order_cap_exceeded(const std::string& what) : error(what) {}
};

struct not_normal : error {
    long conjugator = -1, element = -1;  // g n g^-1 outside the subgroup
    not_normal(const std::string& what, long g, long n)
        : error(what), conjugator(g), element(n) {}
};

struct not_coprime : error {
    explicit not_coprime(const std::string& what) : error(what) {}
};

struct not_class_closed : error {
    explicit not_class_closed(const std::string& what) : error(what) {}
};

struct hypothesis_violated : error {
    explicit hypothesis_violated(const std::string& what) : error(what) {}
};

struct not_monomial : error {
    explicit not_monomial(const std::string& what) : error(what) {}
};

struct not_nilpotent : error {
    explicit not_nilpotent(const std::string& what) : error(what) {}
};

struct search_space_exceeded : error {
    explicit search_space_exceeded(const std::string& what) : error(what) {}
};

struct parse_error : error {
    explicit parse_error(const std::string& what) : error(what) {}
};

struct unknown_name : error {
    explicit unknown_name(const std::string& what) : error(what) {}
};

// A mathematically impossible state: always a bug in this library.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace zcenter

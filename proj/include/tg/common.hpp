#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace tg {

using Int = boost::multiprecision::cpp_int;

// Input or axiom violation; carries a located witness in the message.
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A condition the library guarantees internally was found broken.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Coefficient system selector: the integers, the rationals, or a prime field.
struct Coeffs {
    enum Kind { Z, Q, Fp } kind = Z;
    long p = 0;  // prime, only for Fp

    static Coeffs integers() { return {Z, 0}; }
    static Coeffs rationals() { return {Q, 0}; }
    static Coeffs prime_field(long p) { return {Fp, p}; }
    bool is_field() const { return kind != Z; }
    std::string name() const
    {
        switch (kind) {
            case Z: return "Z";
            case Q: return "Q";
            default: return "F" + std::to_string(p);
        }
    }
};

}  // namespace tg

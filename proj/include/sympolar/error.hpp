#pragma once

#include <stdexcept>
#include <string>

namespace sympolar {

// Every precondition/validation failure in the library throws Error with one
// of these codes, so tests and the CLI can distinguish failure kinds.
enum class Errc {
    not_prime,
    order_too_large,
    zero_inverse,
    length_mismatch,
    ambient_mismatch,
    bad_dimension,
    zero_subspace,
    non_isotropic_seed,
    seed_shape,
    empty_family,
    wrong_tau,
    precondition_violated,
    too_large,
    non_canonical,
    parse_error,
    inexact_division,
};

const char* errcName(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errcName(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
    if (!ok) fail(code, what);
}

}  // namespace sympolar

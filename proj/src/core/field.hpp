#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace rtri {

// Canonical encoding of a field element: sum coeffs[i] * p^i, in [0, q).
using fe = std::uint64_t;

// F_{p^k} for odd prime p >= 5, elements represented by little-endian base-p
// digit vectors of length k, all operations exact. Characteristics 2 and 3
// are rejected at construction: with 3 = 0 the two apexes of a unit pair
// collapse, and q must be odd for the apex formula's division by 2.
//
// Immutable after construction; safe for concurrent use.
class Field {
public:
    // modulus: monic degree-k coefficient list (c0..ck, ck = 1), required
    // irreducible over F_p. Pass nullptr to auto-search (seeded, k > 1).
    static Field make(std::uint64_t p, unsigned k,
                      const std::vector<std::uint64_t>* modulus = nullptr,
                      std::uint64_t seed = 0);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint64_t>& modulus() const { return modulus_; }

    bool operator==(const Field& o) const {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

    fe add(fe a, fe b) const;
    fe sub(fe a, fe b) const;
    fe neg(fe a) const;
    fe mul(fe a, fe b) const;
    fe inv(fe a) const; // DivisionByZero on 0
    fe pow(fe a, std::uint64_t n) const;

    // quadratic character: 0 for 0, else +1 for squares, -1 for non-squares
    int chi(fe e) const;

    // Tonelli-Shanks. nullopt when e is a non-residue; {0, 0} for e = 0;
    // otherwise the two roots ordered by encoding.
    std::optional<std::pair<fe, fe>> sqrt(fe e) const;

    std::vector<std::uint64_t> decode(fe e) const;
    fe encode(const std::vector<std::uint64_t>& coeffs) const;

    // "field p=<p> k=<k> modulus=<c0,...,ck>" (modulus omitted when k = 1)
    std::string header_line() const;

    // element with small integer value n (n * 1, exact in any characteristic)
    fe from_int(std::uint64_t n) const { return n % p_; }

private:
    Field() = default;

    void check_elem(fe e) const {
        if (e >= q_) fail(Status::bad_argument, "element encoding out of range");
    }

    std::uint64_t p_ = 0;
    unsigned k_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> modulus_; // size k+1, monic

    // reduction row: x^k = sum red_[j] x^j, i.e. red_[j] = p - modulus[j] mod p
    std::vector<std::uint64_t> red_;
};

// deterministic Miller-Rabin, exact for all 64-bit inputs
bool is_prime_u64(std::uint64_t n);

} // namespace rtri

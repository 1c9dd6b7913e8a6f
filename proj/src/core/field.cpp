#include "field.hpp"

#include <algorithm>
#include <sstream>

#include "rng.hpp"

namespace rtri {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod(u64 a, u64 n, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (n) {
        if (n & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        n >>= 1;
    }
    return r;
}

// ---- dense polynomial helpers over F_p (little-endian coefficient vectors)

void poly_trim(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::vector<u64> poly_mulmod(const std::vector<u64>& a, const std::vector<u64>& b,
                             const std::vector<u64>& f, u64 p) {
    std::vector<u64> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + static_cast<u128>(a[i]) * b[j]) % p;
    }
    // long division by monic f
    std::size_t k = f.size() - 1;
    for (std::size_t i = prod.size(); i-- > k;) {
        u64 c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::size_t j = 0; j < k; ++j) {
            u64 t = mulmod(c, f[j], p);
            prod[i - k + j] = (prod[i - k + j] + p - t) % p;
        }
    }
    prod.resize(k);
    return prod;
}

std::vector<u64> poly_powmod(std::vector<u64> base, u64 n,
                             const std::vector<u64>& f, u64 p) {
    std::vector<u64> r{1};
    r.resize(f.size() - 1, 0);
    base.resize(f.size() - 1, 0);
    while (n) {
        if (n & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        n >>= 1;
    }
    return r;
}

std::vector<u64> poly_mod(std::vector<u64> a, const std::vector<u64>& b, u64 p) {
    // b nonzero, not necessarily monic
    poly_trim(a);
    u64 lead_inv = powmod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        u64 c = mulmod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            u64 t = mulmod(c, b[j], p);
            a[shift + j] = (a[shift + j] + p - t) % p;
        }
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

bool poly_gcd_is_constant(std::vector<u64> a, std::vector<u64> b, u64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        a = poly_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a.size() <= 1;
}

// f monic of degree k: irreducible iff no factor of degree <= k/2, detected
// through gcd(f, x^{p^i} - x) for i = 1 .. k/2
bool poly_irreducible(const std::vector<u64>& f, u64 p) {
    std::size_t k = f.size() - 1;
    if (k == 1) return true;
    std::vector<u64> frob{0, 1}; // x
    frob.resize(k, 0);
    for (std::size_t i = 1; i <= k / 2; ++i) {
        frob = poly_powmod(frob, p, f, p); // x^{p^i} mod f
        std::vector<u64> diff = frob;
        diff[1] = (diff[1] + p - 1) % p; // - x
        if (!poly_gcd_is_constant(f, diff, p)) return false;
    }
    return true;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 s : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % s == 0) return n == s;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::make(u64 p, unsigned k, const std::vector<u64>* modulus, u64 seed) {
    if (!is_prime_u64(p)) fail(Status::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (p < 5) fail(Status::char_too_small,
                    "characteristic " + std::to_string(p) + " < 5 is excluded");
    if (k < 1) fail(Status::bad_argument, "k must be >= 1");

    // keep q small enough that point indices q^2 fit in 64 bits
    u64 q = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (q > (1ULL << 31) / p) fail(Status::bad_argument, "q = p^k too large");
        q *= p;
    }

    Field f;
    f.p_ = p;
    f.k_ = k;
    f.q_ = q;

    if (modulus) {
        if (modulus->size() != k + 1 || modulus->back() != 1)
            fail(Status::bad_argument, "modulus must be monic of degree k");
        for (u64 c : *modulus)
            if (c >= p) fail(Status::bad_argument, "modulus coefficient out of range");
        if (k == 1) {
            f.modulus_ = {0, 1};
        } else {
            if (!poly_irreducible(*modulus, p))
                fail(Status::reducible_modulus, "modulus is reducible over F_p");
            f.modulus_ = *modulus;
        }
    } else if (k == 1) {
        f.modulus_ = {0, 1};
    } else {
        // seeded search over random monic candidates
        Rng rng(seed);
        std::vector<u64> cand(k + 1, 0);
        cand[k] = 1;
        for (;;) {
            for (unsigned i = 0; i < k; ++i) cand[i] = rng.below(p);
            if (poly_irreducible(cand, p)) break;
        }
        f.modulus_ = cand;
    }

    f.red_.assign(k, 0);
    for (unsigned j = 0; j < k; ++j) f.red_[j] = (p - f.modulus_[j]) % p;
    return f;
}

std::vector<u64> Field::decode(fe e) const {
    check_elem(e);
    std::vector<u64> d(k_);
    for (unsigned i = 0; i < k_; ++i) {
        d[i] = e % p_;
        e /= p_;
    }
    return d;
}

fe Field::encode(const std::vector<u64>& coeffs) const {
    if (coeffs.size() != k_) fail(Status::bad_argument, "coefficient list must have length k");
    fe e = 0;
    for (unsigned i = k_; i-- > 0;) {
        if (coeffs[i] >= p_) fail(Status::bad_argument, "coefficient out of range");
        e = e * p_ + coeffs[i];
    }
    return e;
}

fe Field::add(fe a, fe b) const {
    check_elem(a);
    check_elem(b);
    if (k_ == 1) {
        fe s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    fe out = 0, pw = 1;
    for (unsigned i = 0; i < k_; ++i) {
        u64 s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * pw;
        pw *= p_;
        a /= p_;
        b /= p_;
    }
    return out;
}

fe Field::sub(fe a, fe b) const { return add(a, neg(b)); }

fe Field::neg(fe a) const {
    check_elem(a);
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    fe out = 0, pw = 1;
    for (unsigned i = 0; i < k_; ++i) {
        u64 d = a % p_;
        out += (d == 0 ? 0 : p_ - d) * pw;
        pw *= p_;
        a /= p_;
    }
    return out;
}

fe Field::mul(fe a, fe b) const {
    check_elem(a);
    check_elem(b);
    if (k_ == 1) return mulmod(a, b, p_);

    u64 da[64], db[64], prod[128];
    for (unsigned i = 0; i < k_; ++i) { da[i] = a % p_; a /= p_; }
    for (unsigned i = 0; i < k_; ++i) { db[i] = b % p_; b /= p_; }
    for (unsigned i = 0; i < 2 * k_; ++i) prod[i] = 0;
    for (unsigned i = 0; i < k_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < k_; ++j)
            prod[i + j] = (prod[i + j] + static_cast<u128>(da[i]) * db[j]) % p_;
    }
    for (unsigned i = 2 * k_ - 1; i >= k_; --i) {
        u64 c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < k_; ++j)
            prod[i - k_ + j] = (prod[i - k_ + j] + static_cast<u128>(c) * red_[j]) % p_;
    }
    fe out = 0;
    for (unsigned i = k_; i-- > 0;) out = out * p_ + prod[i];
    return out;
}

fe Field::pow(fe a, u64 n) const {
    check_elem(a);
    fe r = 1, base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

fe Field::inv(fe a) const {
    check_elem(a);
    if (a == 0) fail(Status::division_by_zero, "inverse of zero");
    return pow(a, q_ - 2);
}

int Field::chi(fe e) const {
    check_elem(e);
    if (e == 0) return 0;
    fe r = pow(e, (q_ - 1) / 2);
    if (r == 1) return 1;
    if (r != neg(1)) fail(Status::internal, "character not in {1,-1}");
    return -1;
}

std::optional<std::pair<fe, fe>> Field::sqrt(fe e) const {
    check_elem(e);
    if (e == 0) return std::make_pair(fe(0), fe(0));
    if (chi(e) == -1) return std::nullopt;

    // q - 1 = 2^s * t with t odd
    u64 t = q_ - 1;
    unsigned s = 0;
    while ((t & 1) == 0) { t >>= 1; ++s; }

    // least non-residue by canonical encoding
    fe z = 0;
    for (fe cand = 1; cand < q_; ++cand) {
        if (chi(cand) == -1) { z = cand; break; }
    }

    fe c = pow(z, t);
    fe r = pow(e, (t + 1) / 2);
    fe w = pow(e, t);
    unsigned m = s;
    while (w != 1) {
        unsigned i = 0;
        fe probe = w;
        while (probe != 1) { probe = mul(probe, probe); ++i; }
        fe b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = mul(b, b);
        m = i;
        c = mul(b, b);
        w = mul(w, c);
        r = mul(r, b);
    }
    fe r2 = neg(r);
    return std::make_pair(std::min(r, r2), std::max(r, r2));
}

std::string Field::header_line() const {
    std::ostringstream os;
    os << "field p=" << p_ << " k=" << k_;
    if (k_ > 1) {
        os << " modulus=";
        for (std::size_t i = 0; i < modulus_.size(); ++i) {
            if (i) os << ',';
            os << modulus_[i];
        }
    }
    return os.str();
}

} // namespace rtri

#include "cycmzv/residue.hpp"

#include "cycmzv/primes.hpp"

namespace cycmzv {

namespace {

std::uint64_t reduce_integer(const Integer& z, std::uint64_t p) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

void check_compatible(const ResidueVector& a, const ResidueVector& b) {
    if (a.prime != b.prime || a.ideal != b.ideal || a.coords.size() != b.coords.size())
        throw Error("residue vectors live in different quotients");
}

}  // namespace

ResidueVector ResidueVector::zero(std::uint64_t p, Ideal ideal) {
    ResidueVector r;
    r.prime = p;
    r.ideal = ideal;
    r.coords.assign(ideal == Ideal::Full ? p - 1 : 1, 0);
    return r;
}

ResidueVector ResidueVector::scalar(std::uint64_t p, Ideal ideal, std::uint64_t value) {
    ResidueVector r = zero(p, ideal);
    r.coords[0] = value % p;
    return r;
}

ResidueVector ResidueVector::varpi(std::uint64_t p) {
    ResidueVector r = zero(p, Ideal::Full);
    if (p == 2) return r;  // zeta_2 = -1, so 1 - zeta_2 = 2 = 0
    r.coords[0] = 1;
    r.coords[1] = p - 1;
    return r;
}

bool ResidueVector::is_zero() const {
    for (auto c : coords)
        if (c != 0) return false;
    return true;
}

ResidueVector ResidueVector::prime_image() const {
    if (ideal == Ideal::Prime) return *this;
    std::uint64_t s = 0;
    for (auto c : coords) s = (s + c) % prime;
    return scalar(prime, Ideal::Prime, s);
}

ResidueVector& ResidueVector::operator+=(const ResidueVector& o) {
    check_compatible(*this, o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = (coords[i] + o.coords[i]) % prime;
    return *this;
}

ResidueVector& ResidueVector::operator-=(const ResidueVector& o) {
    check_compatible(*this, o);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = (coords[i] + prime - o.coords[i]) % prime;
    return *this;
}

ResidueVector& ResidueVector::operator*=(const ResidueVector& o) {
    check_compatible(*this, o);
    if (ideal == Ideal::Prime) {
        coords[0] = mul_mod(coords[0], o.coords[0], prime);
        return *this;
    }
    // Multiply modulo Phi_p(x) = 1 + x + ... + x^{p-1}: fold x^{p-1+j} via x^p = 1
    // and x^{p-1} = -(1 + ... + x^{p-2}).
    const std::size_t d = coords.size();  // p - 1
    std::vector<std::uint64_t> cyc(prime, 0);  // product modulo x^p - 1
    for (std::size_t i = 0; i < d; ++i) {
        if (coords[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (o.coords[j] == 0) continue;
            std::size_t k = (i + j) % prime;
            cyc[k] = (cyc[k] + mul_mod(coords[i], o.coords[j], prime)) % prime;
        }
    }
    const std::uint64_t top = cyc[d];
    for (std::size_t i = 0; i < d; ++i) coords[i] = (cyc[i] + prime - top) % prime;
    return *this;
}

ResidueVector& ResidueVector::scale(std::uint64_t s) {
    s %= prime;
    for (auto& c : coords) c = mul_mod(c, s, prime);
    return *this;
}

ResidueVector operator+(ResidueVector a, const ResidueVector& b) { return a += b; }
ResidueVector operator-(ResidueVector a, const ResidueVector& b) { return a -= b; }
ResidueVector operator*(ResidueVector a, const ResidueVector& b) { return a *= b; }

std::uint64_t reduce_rational(const Rational& q, std::uint64_t p) {
    const std::uint64_t d = reduce_integer(q.get_den(), p);
    if (d == 0) throw PrimeExcluded(p, "prime " + std::to_string(p) + " divides a denominator");
    return mul_mod(reduce_integer(q.get_num(), p), inv_mod(d, p), p);
}

ResidueVector reduce_mod(const CycloElem& elem, Ideal ideal) {
    const auto p = static_cast<std::uint64_t>(elem.level());
    if (!is_prime(p)) throw Error("reduce_mod: level " + std::to_string(p) + " is not prime");
    const std::uint64_t d = reduce_integer(elem.denominator(), p);
    if (d == 0) throw PrimeExcluded(p, "prime " + std::to_string(p) + " divides a denominator");
    const std::uint64_t dinv = inv_mod(d, p);
    ResidueVector full = ResidueVector::zero(p, Ideal::Full);
    const auto& num = elem.numerators();
    for (std::size_t i = 0; i < num.size(); ++i) full.coords[i] = mul_mod(reduce_integer(num[i], p), dinv, p);
    return ideal == Ideal::Full ? full : full.prime_image();
}

}  // namespace cycmzv

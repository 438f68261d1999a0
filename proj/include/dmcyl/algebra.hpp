#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmcyl/error.hpp"
#include "dmcyl/rational.hpp"

namespace dmcyl {

struct Generator {
    std::string name;
    int degree = 0;
};

// Free graded-commutative algebra over Q. Even generators are polynomial,
// odd generators are exterior (square zero).
class FreeGCAlgebra {
public:
    explicit FreeGCAlgebra(std::vector<Generator> gens);

    std::size_t size() const { return gens_.size(); }
    const Generator& gen(std::size_t i) const { return gens_[i]; }
    const std::vector<Generator>& gens() const { return gens_; }
    bool odd(std::size_t i) const { return gens_[i].degree % 2 != 0; }
    std::optional<std::size_t> find(std::string_view name) const;
    int mono_degree(const std::vector<int>& exp) const;

    bool operator==(const FreeGCAlgebra& o) const;
    bool operator!=(const FreeGCAlgebra& o) const { return !(*this == o); }

private:
    std::vector<Generator> gens_;
};

using AlgebraPtr = std::shared_ptr<const FreeGCAlgebra>;

AlgebraPtr make_algebra(std::vector<Generator> gens);

// Exponent vector in algebra order; degree cached for the term order.
// Order: graded, then lexicographic with higher exponents on earlier
// generators first (order tag "grlex-desc-v1").
struct Monomial {
    int degree = 0;
    std::vector<int> exp;

    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        return b.exp < a.exp;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp == b.exp; }
};

// All canonical monomials of total degree d, in term order.
std::vector<Monomial> monomial_basis(const FreeGCAlgebra& alg, int d);

// Merge exponents with the Koszul sign; returns 0 if an odd generator squares.
int mono_mul(const FreeGCAlgebra& alg, const std::vector<int>& a, const std::vector<int>& b,
             std::vector<int>& out);

class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static Polynomial zero(AlgebraPtr alg) { return Polynomial(std::move(alg)); }
    static Polynomial one(AlgebraPtr alg);
    static Polynomial generator(AlgebraPtr alg, std::size_t i);
    static Polynomial monomial(AlgebraPtr alg, std::vector<int> exp, Rational coeff = Rational(1));

    const AlgebraPtr& algebra() const { return alg_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    // Common degree of all terms; nullopt when mixed or zero.
    std::optional<int> homogeneous_degree() const;
    // Zero is homogeneous of every degree.
    bool homogeneous_of(int d) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    // Graded-commutative product; throws on mismatched algebras.
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial pow(int e) const;

    void add_term(const Monomial& m, const Rational& c);
    std::string str() const;  // expression-grammar compatible rendering

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

private:
    AlgebraPtr alg_;
    std::map<Monomial, Rational> terms_;
};

void check_same_algebra(const Polynomial& a, const Polynomial& b, const char* where);

// Coefficient vector over monomial_basis(alg, d); poly must be homogeneous of d.
QVec to_vec(const Polynomial& p, const std::vector<Monomial>& basis);
Polynomial from_vec(const AlgebraPtr& alg, const std::vector<Monomial>& basis, const QVec& v);

}  // namespace dmcyl

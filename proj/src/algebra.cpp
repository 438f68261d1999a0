#include "dmcyl/algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dmcyl {

FreeGCAlgebra::FreeGCAlgebra(std::vector<Generator> gens) : gens_(std::move(gens)) {
    std::set<std::string> seen;
    for (const auto& g : gens_) {
        if (g.degree < 1)
            throw error("generator '" + g.name + "' must have positive degree");
        if (!seen.insert(g.name).second)
            throw error("duplicate generator name '" + g.name + "'");
    }
}

std::optional<std::size_t> FreeGCAlgebra::find(std::string_view name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    return std::nullopt;
}

int FreeGCAlgebra::mono_degree(const std::vector<int>& exp) const {
    int d = 0;
    for (std::size_t i = 0; i < exp.size(); ++i)
        d += exp[i] * gens_[i].degree;
    return d;
}

bool FreeGCAlgebra::operator==(const FreeGCAlgebra& o) const {
    if (gens_.size() != o.gens_.size())
        return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree)
            return false;
    return true;
}

AlgebraPtr make_algebra(std::vector<Generator> gens) {
    return std::make_shared<FreeGCAlgebra>(std::move(gens));
}

std::vector<Monomial> monomial_basis(const FreeGCAlgebra& alg, int d) {
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    std::vector<int> cur(alg.size(), 0);
    // Exponents descend on the first generator, giving term order directly.
    auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
        if (i == alg.size()) {
            if (rem == 0)
                out.push_back(Monomial{d, cur});
            return;
        }
        const int gd = alg.gen(i).degree;
        int emax = rem / gd;
        if (alg.odd(i))
            emax = std::min(emax, 1);
        for (int e = emax; e >= 0; --e) {
            cur[i] = e;
            self(self, i + 1, rem - e * gd);
        }
        cur[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

int mono_mul(const FreeGCAlgebra& alg, const std::vector<int>& a, const std::vector<int>& b,
             std::vector<int>& out) {
    const std::size_t n = alg.size();
    out.resize(n);
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a[i] + b[i];
        if (alg.odd(i)) {
            if (out[i] > 1)
                return 0;
            if (a[i]) {
                // odd generator from the left factor hops over earlier odd
                // generators of the right factor
                for (std::size_t j = 0; j < i; ++j)
                    if (alg.odd(j) && b[j])
                        ++inversions;
            }
        }
    }
    return inversions % 2 ? -1 : 1;
}

Polynomial Polynomial::one(AlgebraPtr alg) {
    Polynomial p(alg);
    p.terms_[Monomial{0, std::vector<int>(alg->size(), 0)}] = 1;
    return p;
}

Polynomial Polynomial::generator(AlgebraPtr alg, std::size_t i) {
    std::vector<int> e(alg->size(), 0);
    e[i] = 1;
    return monomial(std::move(alg), std::move(e));
}

Polynomial Polynomial::monomial(AlgebraPtr alg, std::vector<int> exp, Rational coeff) {
    Polynomial p(alg);
    if (coeff != 0) {
        const int d = p.alg_->mono_degree(exp);
        p.terms_[Monomial{d, std::move(exp)}] = std::move(coeff);
    }
    return p;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty())
        return std::nullopt;
    const int d = terms_.begin()->first.degree;
    for (const auto& [m, c] : terms_)
        if (m.degree != d)
            return std::nullopt;
    return d;
}

bool Polynomial::homogeneous_of(int d) const {
    for (const auto& [m, c] : terms_)
        if (m.degree != d)
            return false;
    return true;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (!alg_)
        alg_ = o.alg_;
    else if (o.alg_ && !o.terms_.empty())
        check_same_algebra(*this, o, "add");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (!alg_)
        alg_ = o.alg_;
    else if (o.alg_ && !o.terms_.empty())
        check_same_algebra(*this, o, "subtract");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_algebra(a, b, "multiply");
    Polynomial out(a.alg_ ? a.alg_ : b.alg_);
    if (!out.alg_)
        return out;
    const FreeGCAlgebra& alg = *out.alg_;
    std::vector<int> merged;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            const int sign = mono_mul(alg, ma.exp, mb.exp, merged);
            if (sign == 0)
                continue;
            out.add_term(Monomial{ma.degree + mb.degree, merged}, sign * ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0)
        throw error("negative exponent");
    Polynomial out = Polynomial::one(alg_);
    for (int i = 0; i < e; ++i)
        out = out * *this;
    return out;
}

void check_same_algebra(const Polynomial& a, const Polynomial& b, const char* where) {
    if (!a.algebra() || !b.algebra())
        return;  // zero over unspecified algebra is compatible with anything
    if (*a.algebra() != *b.algebra())
        throw error(std::string("mismatched algebras in ") + where);
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational coeff = c;
        if (first) {
            if (coeff < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0)
                coeff = -coeff;
        }
        first = false;
        std::string vars;
        for (std::size_t i = 0; i < m.exp.size(); ++i) {
            if (m.exp[i] == 0)
                continue;
            if (!vars.empty())
                vars += "*";
            vars += alg_->gen(i).name;
            if (m.exp[i] > 1)
                vars += "^" + std::to_string(m.exp[i]);
        }
        if (vars.empty()) {
            os << rat_str(coeff);
        } else {
            if (coeff != 1)
                os << rat_str(coeff) << "*";
            os << vars;
        }
    }
    return os.str();
}

QVec to_vec(const Polynomial& p, const std::vector<Monomial>& basis) {
    QVec v(basis.size(), Rational(0));
    for (const auto& [m, c] : p.terms()) {
        const auto it = std::lower_bound(basis.begin(), basis.end(), m);
        if (it == basis.end() || !(*it == m))
            throw error("monomial outside slice basis (non-homogeneous input?)");
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

Polynomial from_vec(const AlgebraPtr& alg, const std::vector<Monomial>& basis, const QVec& v) {
    Polynomial p(alg);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0)
            p.add_term(basis[i], v[i]);
    return p;
}

}  // namespace dmcyl

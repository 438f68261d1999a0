#pragma once

#include <optional>
#include <vector>

#include "dmcyl/algebra.hpp"
#include "dmcyl/linalg.hpp"

namespace dmcyl {

// Degree-preserving algebra map given by generator images.
class AlgebraMorphism {
public:
    AlgebraMorphism(AlgebraPtr source, AlgebraPtr target, std::vector<Polynomial> images);
    static AlgebraMorphism identity(const AlgebraPtr& alg);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const Polynomial& image(std::size_t i) const { return images_[i]; }
    const std::vector<Polynomial>& images() const { return images_; }

    // Multiplicative, linear extension; errors if p is not over the source.
    Polynomial apply(const Polynomial& p) const;

private:
    AlgebraPtr source_, target_;
    std::vector<Polynomial> images_;
};

// Basis of the Q-span of {apply(m, mu) : mu source monomial of degree d},
// by exact row reduction over the target monomial basis.
std::vector<Polynomial> image_slice(const AlgebraMorphism& m, int d);

struct SurjectivityReport {
    bool surjective = false;  // certified through `bound` only
    int bound = 0;
    int fail_degree = -1;     // exact and final when !surjective
    Polynomial missing;       // explicit target class outside the image
};

struct InjectivityReport {
    bool injective = false;  // certified through `bound` only
    int bound = 0;
    int kernel_degree = -1;
    Polynomial kernel_element;  // nonzero source element mapping to 0
};

SurjectivityReport surjectivity_report(const AlgebraMorphism& m, int D);
InjectivityReport injectivity_report(const AlgebraMorphism& m, int D);
// Degreewise kernel basis (primitive integer vectors, canonical order).
std::vector<Polynomial> kernel_slice(const AlgebraMorphism& m, int d);

// im(phi) + im(psi) against the common target slice, degree by degree.
SurjectivityReport sum_image_report(const AlgebraMorphism& phi, const AlgebraMorphism& psi, int D);

// A1 tensored with a contractible factor Lambda(U + dU) making Phi surjective.
class ContractibleExtension {
public:
    struct Pair {
        std::size_t u;        // index into the extended algebra
        std::size_t du;
        Polynomial value;     // Phi(u), a target class outside im(phi)
    };

    ContractibleExtension(AlgebraPtr base, AlgebraPtr extended, std::vector<Pair> pairs,
                          AlgebraMorphism phi_ext, int bound);

    const AlgebraPtr& base() const { return base_; }
    const AlgebraPtr& extended() const { return extended_; }
    const std::vector<Pair>& pairs() const { return pairs_; }
    const AlgebraMorphism& Phi() const { return phi_; }
    int bound() const { return bound_; }

    // Differential: base generators to 0, u to du, du to 0; extended as a derivation.
    const Polynomial& d_gen(std::size_t i) const { return dgens_[i]; }
    Polynomial d(const Polynomial& p) const;

    Polynomial include(const Polynomial& base_element) const;

private:
    AlgebraPtr base_, extended_;
    std::vector<Pair> pairs_;
    AlgebraMorphism phi_;
    std::vector<Polynomial> dgens_;
    int bound_;
};

// For every degree d <= D where image_slice(phi, d) misses part of the target
// slice, adjoins one pair (w, dw) per missing basis class z with Phi(w) = z.
ContractibleExtension surjective_trick(const AlgebraMorphism& phi, int D);

// Derivation extension of generator images d_i (degree +1, Koszul signs).
Polynomial derivation_apply(const AlgebraPtr& alg, const std::vector<Polynomial>& dgens,
                            const Polynomial& p);

}  // namespace dmcyl

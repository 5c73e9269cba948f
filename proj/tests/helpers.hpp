#pragma once

#include <random>
#include <vector>

#include "algebrae/algebra.hpp"

namespace testutil {

using algebrae::AlgebraId;
using algebrae::Scalar;
using algebrae::Tag;

inline std::mt19937_64 make_rng(unsigned seed) { return std::mt19937_64(seed); }

inline Scalar random_scalar(const AlgebraId& alg, std::mt19937_64& rng, double scale = 1.0) {
    std::normal_distribution<double> dist(0.0, scale);
    std::vector<double> c(alg.dim());
    for (double& x : c) x = dist(rng);
    return Scalar(alg, std::span<const double>(c.data(), c.size()));
}

// The seven named algebras plus a K_t sample grid.
inline std::vector<AlgebraId> all_algebras() {
    std::vector<AlgebraId> out = {AlgebraId(Tag::R),  AlgebraId(Tag::C),  AlgebraId(Tag::D),
                                  AlgebraId(Tag::Cs), AlgebraId(Tag::H),  AlgebraId(Tag::Hs),
                                  AlgebraId(Tag::CxC)};
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) out.push_back(AlgebraId::kt(t));
    return out;
}

inline double dist(const Scalar& a, const Scalar& b) { return (a - b).coeff_norm(); }

}  // namespace testutil

#pragma once

#include "gcs4/matrix.hpp"

namespace gcs4 {

// Matrix data (J, R, sigma) of a generalized almost complex structure on a
// 4-dimensional Lie algebra g, in the block form
//
//        K = [ J      R   ]        on  g (+) g*,
//            [ sigma  -J* ]
//
// where J : g -> g, R : g* -> g is induced by a bivector, and sigma : g -> g*
// is induced by a 2-form. All three are stored as matrices in the fixed basis
// (bivector and 2-form in their induced-map form, so R is the matrix of
// alpha |-> pi^#(alpha) and sigma the matrix of u |-> omega_#(u)).
struct Triple {
    QMatrix J, R, sigma;

    Triple() : J(4, 4), R(4, 4), sigma(4, 4) {}
    Triple(QMatrix j, QMatrix r, QMatrix s)
        : J(std::move(j)), R(std::move(r)), sigma(std::move(s)) {}
};

}  // namespace gcs4

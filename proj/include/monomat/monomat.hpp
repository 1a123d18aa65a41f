#pragma once

#include <monomat/dense_matrix.hpp>
#include <monomat/evaluator.hpp>
#include <monomat/matrix_io.hpp>
#include <monomat/membership.hpp>
#include <monomat/monomial.hpp>
#include <monomat/oracle.hpp>
#include <monomat/permutation.hpp>
#include <monomat/polynomial.hpp>
#include <monomat/polynomial_io.hpp>
#include <monomat/rational.hpp>

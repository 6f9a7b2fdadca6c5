#pragma once

#include <random>
#include <vector>

#include "partcat/diagrams.hpp"
#include "partcat/partalg.hpp"
#include "partcat/scalars.hpp"

namespace fixtures {

using partcat::diagrams::Diagram;
using partcat::partalg::Element;
using partcat::scalars::Rational;

// Idempotents of FP_n(t0) built from known ones (identity, symmetrizers,
// zeta, rescaled diagrams) and conjugated by a random unit.
Element<Rational> random_idempotent(std::mt19937& rng, int n, const Rational& t0);

Diagram random_diagram(std::mt19937& rng, int n, int m);

}  // namespace fixtures

#pragma once

#include "hilbsam/errors.hpp"
#include "hilbsam/coefficient.hpp"
#include "hilbsam/monomial.hpp"
#include "hilbsam/polynomial.hpp"
#include "hilbsam/ring.hpp"
#include "hilbsam/groebner.hpp"
#include "hilbsam/ideal.hpp"
#include "hilbsam/hilbert.hpp"
#include "hilbsam/curves.hpp"
#include "hilbsam/verify.hpp"
#include "hilbsam/parser.hpp"

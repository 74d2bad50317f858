#pragma once

#include "bigint.hpp"
#include "bundle.hpp"
#include "classifier.hpp"
#include "cohomology.hpp"
#include "errors.hpp"
#include "frobenius.hpp"
#include "fsplit.hpp"
#include "matrix.hpp"
#include "monomial.hpp"
#include "parallel.hpp"
#include "polynomial.hpp"
#include "prime_field.hpp"
#include "report.hpp"

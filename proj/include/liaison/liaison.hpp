#pragma once

#include "liaison/errors.hpp"
#include "liaison/monomial.hpp"
#include "liaison/monomial_ideal.hpp"
#include "liaison/hilbert.hpp"
#include "liaison/layers.hpp"
#include "liaison/prime_field.hpp"
#include "liaison/polynomial.hpp"
#include "liaison/lifting.hpp"
#include "liaison/oracle.hpp"
#include "liaison/linkage.hpp"
#include "liaison/json_io.hpp"

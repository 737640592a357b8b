#pragma once

#include "block.hpp"
#include "elimination.hpp"
#include "equivalence.hpp"
#include "errors.hpp"
#include "geninv.hpp"
#include "instance_gen.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "scalar.hpp"
#include "stein.hpp"
#include "sylvester.hpp"
#include "twosided.hpp"

// Umbrella header.

#ifndef FERROCODE_FERROCODE_HPP
#define FERROCODE_FERROCODE_HPP

#include "bigint.hpp"
#include "codes.hpp"
#include "echelon.hpp"
#include "errors.hpp"
#include "fdcodes.hpp"
#include "ferrers.hpp"
#include "gf.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "search.hpp"

#endif

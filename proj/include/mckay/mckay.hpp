#ifndef MCKAY_MCKAY_HPP
#define MCKAY_MCKAY_HPP

// Umbrella header for the whole library.

#include "mckay/catalog.hpp"
#include "mckay/criteria.hpp"
#include "mckay/cyclotomic.hpp"
#include "mckay/epoly.hpp"
#include "mckay/error.hpp"
#include "mckay/group.hpp"
#include "mckay/hilbert.hpp"
#include "mckay/matrix.hpp"
#include "mckay/rational.hpp"
#include "mckay/series.hpp"
#include "mckay/stringy.hpp"

#endif  // MCKAY_MCKAY_HPP

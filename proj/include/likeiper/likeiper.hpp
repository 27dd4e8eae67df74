#ifndef LIKEIPER_LIKEIPER_HPP
#define LIKEIPER_LIKEIPER_HPP

#include "big_complex.hpp"
#include "big_real.hpp"
#include "constants.hpp"
#include "errors.hpp"
#include "experiments.hpp"
#include "format.hpp"
#include "li.hpp"
#include "reference_data.hpp"
#include "series.hpp"
#include "special.hpp"
#include "zeros.hpp"

#endif // LIKEIPER_LIKEIPER_HPP

#pragma once

// Umbrella header.
#include "octo/errors.hpp"
#include "octo/inner_products.hpp"
#include "octo/io.hpp"
#include "octo/monogenic.hpp"
#include "octo/octonion.hpp"
#include "octo/power_series.hpp"
#include "octo/quadrature.hpp"
#include "octo/slice.hpp"
#include "octo/slice_kernels.hpp"
#include "octo/verify.hpp"

#pragma once

#include "gsinc/coeff_seq.hpp"
#include "gsinc/errors.hpp"
#include "gsinc/generators.hpp"
#include "gsinc/grid.hpp"
#include "gsinc/io.hpp"
#include "gsinc/kernel.hpp"
#include "gsinc/noise.hpp"
#include "gsinc/sampling.hpp"
#include "gsinc/smoothness.hpp"
#include "gsinc/truncation.hpp"

#pragma once

#include "analysis.hpp"
#include "experiment.hpp"
#include "fft.hpp"
#include "group.hpp"
#include "inversion.hpp"
#include "io.hpp"
#include "parallel.hpp"
#include "phantom.hpp"
#include "signal.hpp"
#include "sinogram.hpp"
#include "special.hpp"
#include "transforms.hpp"
#include "unitarize.hpp"
#include "verify.hpp"
#include "wavelet.hpp"

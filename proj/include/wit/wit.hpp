#pragma once

#include "wit/analytic.hpp"
#include "wit/cascade.hpp"
#include "wit/catalog.hpp"
#include "wit/crossdensity.hpp"
#include "wit/cwt.hpp"
#include "wit/divergence.hpp"
#include "wit/dwt.hpp"
#include "wit/entropy.hpp"
#include "wit/error.hpp"
#include "wit/filter_bank.hpp"
#include "wit/infotheory.hpp"
#include "wit/quadrature.hpp"
#include "wit/reference_tables.hpp"
#include "wit/signal.hpp"
#include "wit/signal_io.hpp"
#include "wit/support.hpp"
#include "wit/wavelet.hpp"

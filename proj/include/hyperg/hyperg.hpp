#pragma once

// Umbrella header: unit-argument hypergeometric series, their verified
// transformations, integral representations, and the stage-by-stage proof
// chain connecting them.

#include "hyperg/errors.hpp"
#include "hyperg/exact.hpp"
#include "hyperg/gamma.hpp"
#include "hyperg/gamma_ratio.hpp"
#include "hyperg/hyp2f1_kernel.hpp"
#include "hyperg/integrals.hpp"
#include "hyperg/params.hpp"
#include "hyperg/proof_chain.hpp"
#include "hyperg/quadrature.hpp"
#include "hyperg/rational.hpp"
#include "hyperg/series.hpp"
#include "hyperg/signed_log.hpp"
#include "hyperg/transforms.hpp"

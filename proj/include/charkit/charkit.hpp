#pragma once

#include "charkit/lie_core.hpp"
#include "charkit/polyring.hpp"
#include "charkit/cgseries.hpp"
#include "charkit/fixtures.hpp"
#include "charkit/csmodel.hpp"
#include "charkit/charsolve.hpp"
#include "charkit/reconstruct.hpp"
#include "charkit/tensor.hpp"
#include "charkit/oracle.hpp"

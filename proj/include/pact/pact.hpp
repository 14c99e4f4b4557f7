// Umbrella header.
#pragma once

#include "pact/core.hpp"
#include "pact/algebra.hpp"
#include "pact/finspace.hpp"
#include "pact/paction.hpp"
#include "pact/enumerate.hpp"
#include "pact/envelope.hpp"
#include "pact/homotopy.hpp"
#include "pact/claim.hpp"
#include "pact/instance.hpp"
#include "pact/verify.hpp"

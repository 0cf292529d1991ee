// Umbrella header for the library (the CLI layer is separate in cli.hpp).

#pragma once

#include "gwp/core.hpp"
#include "gwp/dynamics.hpp"
#include "gwp/fft.hpp"
#include "gwp/modes.hpp"
#include "gwp/oracle.hpp"
#include "gwp/squeeze.hpp"
#include "gwp/wavepacket.hpp"

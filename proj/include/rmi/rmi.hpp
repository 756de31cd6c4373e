#pragma once

// Umbrella header for the RMI watermarking toolkit.

#include "rmi/attack.hpp"
#include "rmi/demo.hpp"
#include "rmi/error.hpp"
#include "rmi/image.hpp"
#include "rmi/key.hpp"
#include "rmi/keyfile.hpp"
#include "rmi/metrics.hpp"
#include "rmi/pgm.hpp"
#include "rmi/prng.hpp"
#include "rmi/watermark.hpp"

#pragma once

#define PRCURVE_VERSION_STRING "0.1.0"

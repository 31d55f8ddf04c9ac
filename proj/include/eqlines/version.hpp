#pragma once

#define EQLINES_VERSION "1.0.0"

#pragma once

#include "cellres/error.hpp"
#include "cellres/monomial.hpp"
#include "cellres/field.hpp"
#include "cellres/linalg.hpp"
#include "cellres/complex.hpp"
#include "cellres/subdivision.hpp"
#include "cellres/resolution.hpp"
#include "cellres/morphism.hpp"
#include "cellres/families.hpp"
#include "cellres/covering.hpp"
#include "cellres/boothlueker.hpp"
#include "cellres/io.hpp"

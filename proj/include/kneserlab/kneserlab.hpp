#pragma once

#include "field.hpp"
#include "matrix.hpp"
#include "subspace.hpp"
#include "form.hpp"
#include "enumerate.hpp"
#include "exterior.hpp"
#include "matroid.hpp"
#include "graph.hpp"
#include "family.hpp"
#include "buildings.hpp"
#include "coxeter.hpp"
#include "coclique.hpp"
#include "fixtures.hpp"
#include "cross_validate.hpp"
#include "serialize.hpp"

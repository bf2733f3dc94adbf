// Everything: fields, groups, group algebras, unit groups, presentations,
// decompositions, the isomorphism probe and the catalog.
#pragma once

#include "kgunits/abelian_type.hpp"
#include "kgunits/catalog.hpp"
#include "kgunits/decomposition.hpp"
#include "kgunits/finite_field.hpp"
#include "kgunits/group_algebra.hpp"
#include "kgunits/groups.hpp"
#include "kgunits/isoprobe.hpp"
#include "kgunits/linear_algebra.hpp"
#include "kgunits/polynomial.hpp"
#include "kgunits/presentations.hpp"
#include "kgunits/published.hpp"
#include "kgunits/report.hpp"
#include "kgunits/unit_group.hpp"
#include "kgunits/verify.hpp"
#include "kgunits/word.hpp"

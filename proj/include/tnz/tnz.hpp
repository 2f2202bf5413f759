#pragma once

#include "tnz/actions.hpp"
#include "tnz/counting.hpp"
#include "tnz/errors.hpp"
#include "tnz/explorer.hpp"
#include "tnz/matrix.hpp"
#include "tnz/plane.hpp"
#include "tnz/rational.hpp"
#include "tnz/sign_vector.hpp"
#include "tnz/signed_perm.hpp"
#include "tnz/subsets.hpp"

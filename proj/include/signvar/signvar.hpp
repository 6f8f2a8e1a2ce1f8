#pragma once

// Umbrella header for the sign-variation poset toolkit.

#include "signvar/chain.hpp"
#include "signvar/complex.hpp"
#include "signvar/homology.hpp"
#include "signvar/identities.hpp"
#include "signvar/parallel.hpp"
#include "signvar/partition.hpp"
#include "signvar/poset.hpp"
#include "signvar/serialize.hpp"
#include "signvar/sign_vector.hpp"
#include "signvar/signed_perm.hpp"

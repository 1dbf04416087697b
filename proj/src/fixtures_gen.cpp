// Machine-found propositional derivations (see fixtures/ for the shipped
// copies). Regenerated rarely; verified like any other fixture.
#include "schemata/certs.hpp"

namespace schemata::fixtures {

const char* allrefl_geneq = R"fol(
scheme allrefl { concl: A. x0 x0 = x0 }

proof allrefl_geneq of allrefl from propcalc , EQrefl , genEq {
  1: x0 = x0 by EQrefl
}
)fol";

const char* modald_from_denot = R"fol(
scheme modalD_thm { concl: ( A. x0 -. f0 -> -. A. x0 f0 ) }

proof modalD_proof of modalD_thm from modK , EQrefl , denot {
  1: x0 = x0 by EQrefl
}
)fol";

}  // namespace schemata::fixtures

// Bundled fixture texts. The same content is shipped under fixtures/ as
// plain files; keep the two in sync (tests compare them).
#include "schemata/certs.hpp"

namespace schemata::fixtures {

const char* eqrefl_gen = R"fol(
# A. x0 x0 = x0 from the rule of generalization and reflexivity.
scheme allrefl { concl: A. x0 x0 = x0 }

proof allrefl_gen of allrefl from gen , EQrefl {
  1: x0 = x0 by EQrefl
  2: A. x0 x0 = x0 by gen ( f0 := x0 = x0 ) from 1
}
)fol";

// Filled in by the derivation below (see fixtures/allrefl_geneq.fol).
extern const char* allrefl_geneq;

extern const char* modald_from_denot;

const char* indep_mp = R"fol(
# Without detachment nothing of height 1 is derivable: every axiom
# conclusion here has height at least 2 (reflexivity enters through its
# universal closure, recoverable with spec + mp).
scheme EQreflAll { concl: A. x0 x0 = x0 }
scheme existsEq { dv: x0 x1 ; concl: -. A. x1 -. x1 = x0 }

proof existsEq_mp of existsEq from denot , EQrefl , mp {
  1: x0 = x0 by EQrefl
  2: ( x0 = x0 -> -. A. x1 -. x1 = x0 ) by denot
  3: -. A. x1 -. x1 = x0 by mp ( f0 := x0 = x0 ; f1 := -. A. x1 -. x1 = x0 ) from 1 , 2
}

cert indep-mp {
  validate: minimp , peirce , contrap , notelim , gen , ALLdistr , spec ,
            modal5 , vacGen , ALLcomm , EQreflAll , EQsymm , EQtrans ,
            denot , subst , ALLeq , genEq ;
  falsify: { concl: x0 = x0 } ;
  model heights { } ;
}
)fol";

const char* indep_minimp = R"fol(
language { P 1 }

cert indep-minimp {
  validate: mp , peirce , contrap , notelim , gen , ALLdistr , spec , modal5 ,
            vacGen , ALLcomm , EQrefl , EQsymm , EQtrans , denot , subst ,
            ALLeq , genEq ;
  falsify: minimp ;
  model tt {
    values 5 ;
    imp [ 0 1 1 1 1
          0 0 0 0 0
          0 0 0 0 0
          0 0 4 0 4
          0 0 3 3 0 ] ;
    neg [ 2 0 0 1 1 ] ;
    designated { 0 } ;
    eq const 0 ;
    pred P 3 ;
    quant ignore ;
  } ;
  witness { f0 := v0 = v0 ; f1 := P v0 ; f2 := v0 = v0 ; f3 := v0 = v0 ; f4 := -. v0 = v0 }
}
)fol";

const char* indep_peirce = R"fol(
language { P 1 }

cert indep-peirce {
  validate: mp , minimp , contrap , notelim , gen , ALLdistr , spec , modal5 ,
            vacGen , ALLcomm , EQrefl , EQsymm , EQtrans , denot , subst ,
            ALLeq , genEq ;
  falsify: peirce ;
  model tt {
    values 3 ;
    imp [ 0 1 2
          0 0 2
          0 0 0 ] ;
    neg [ 2 2 0 ] ;
    designated { 0 } ;
    eq const 0 ;
    pred P 1 ;
    quant ignore ;
  } ;
  witness { f0 := P v0 ; f1 := -. v0 = v0 }
}
)fol";

const char* indep_contrap = R"fol(
cert indep-contrap {
  validate: mp , minimp , peirce , notelim , gen , ALLdistr , spec , modal5 ,
            vacGen , ALLcomm , EQrefl , EQsymm , EQtrans , denot , subst ,
            ALLeq , genEq ;
  falsify: contrap ;
  model tt {
    values 3 ;
    imp [ 0 1 1
          0 0 0
          0 0 0 ] ;
    neg [ 1 0 1 ] ;
    designated { 0 } ;
    eq indexed 0 2 ;
    quant ignore ;
  } ;
  witness { f0 := v0 = v1 ; f1 := v0 = v0 }
}
)fol";

const char* indep_notelim = R"fol(
cert indep-notelim {
  validate: mp , minimp , peirce , contrap , gen , ALLdistr , spec , modal5 ,
            vacGen , ALLcomm , EQrefl , EQsymm , EQtrans , denot , subst ,
            ALLeq , genEq ;
  falsify: notelim ;
  model tt {
    values 2 ;
    imp [ 1 1
          0 1 ] ;
    neg [ 1 1 ] ;
    designated { 1 } ;
    eq indexed 1 0 ;
    quant ignore ;
  } ;
  witness { f0 := v0 = v0 ; f1 := v0 = v1 }
}
)fol";

const char* indep_gen = R"fol(
language { P 1 }

cert indep-gen {
  validate: mp , minimp , peirce , contrap , notelim , ALLdistr , spec ,
            modal5 , vacGen , ALLcomm , EQrefl , EQsymm , EQtrans , denot ,
            subst , ALLeq , genEq ;
  falsify: gen ;
  model gen { height 3 } ;
}
)fol";

const char* indep_alldistr_monk = R"fol(
cert indep-ALLdistr-monk {
  validate: mp , minimp , peirce , contrap , notelim , gen , modal5 , vacGen ,
            ALLcomm , EQrefl , EQsymm , EQtrans , denot , subst , ALLeq ,
            genEq ;
  falsify: ALLdistr ;
  model tt {
    values 2 ;
    imp [ 1 1
          0 1 ] ;
    neg [ 1 0 ] ;
    designated { 1 } ;
    eq const 1 ;
    quant monk ;
  } ;
  witness { f0 := v0 = v0 ; f1 := -. v0 = v0 }
}
)fol";

const char* indep_alldistr_nbhd = R"fol(
cert indep-ALLdistr-nbhd {
  validate: mp , minimp , peirce , contrap , notelim , gen , spec , modal5 ,
            ALLcomm , EQrefl , EQsymm , EQtrans , denot , ALLeq , genEq ;
  falsify: ALLdistr ;
  model nbhd {
    worlds 3 ;
    at 0 { { 0 } ; { 0 1 } ; { 0 1 2 } } ;
    at 1 { { 0 1 } ; { 1 2 } ; { 0 1 2 } } ;
    at 2 { { 2 } ; { 0 2 } ; { 1 2 } ; { 0 1 2 } } ;
    eq everywhere ;
  } ;
  witness { world 1 }
}
)fol";

const char* indep_spec = R"fol(
# Quantification domain {0} strictly inside the domain of discourse {0,1};
# equality total so that every element equals a quantifiable one.
language { P 1 }

cert indep-spec {
  validate: mp , minimp , peirce , contrap , notelim , gen , ALLdistr ,
            modal5 , vacGen , ALLcomm , EQrefl , EQsymm , EQtrans , denot ,
            subst , genEq ;
  falsify: spec ;
  model fo { size 2 ; eq total ; pred P { 0 } ; quant { 0 } } ;
  support 1 ;
  witness { f0 := P v0 ; x0 := v0 ; assign v0 = 1 }
}
)fol";

const char* indep_modal5 = R"fol(
language { P 1 }

cert indep-modal5 {
  validate: mp , minimp , peirce , contrap , notelim , gen , ALLdistr , spec ,
            ALLcomm , EQrefl , EQsymm , EQtrans , denot , ALLeq , genEq ;
  falsify: modal5 ;
  model kripke { worlds 2 ; acc { 0 0 ; 0 1 ; 1 1 } ; pred P { 0 } ; eq everywhere } ;
  witness { world 0 }
}
)fol";

const char* indep_eqrefl = R"fol(
cert indep-EQrefl {
  validate: mp , minimp , peirce , contrap , notelim , gen , ALLdistr , spec ,
            modal5 , vacGen , ALLcomm , EQsymm , EQtrans , denot , subst ,
            ALLeq , genEq ;
  falsify: EQrefl ;
  model fo { size 1 ; eq empty } ;
  support 1 ;
  witness { x0 := v0 ; assign v0 = 0 }
}
)fol";

const char* indep_eqsymm = R"fol(
cert indep-EQsymm {
  validate: mp , minimp , peirce , contrap , notelim , gen , ALLdistr , spec ,
            modal5 , vacGen , ALLcomm , EQrefl , EQtrans , denot , genEq ;
  falsify: EQsymm ;
  model fo { size 2 ; eq { 0 0 ; 0 1 ; 1 1 } } ;
  support 1 ;
  witness { x0 := v0 ; x1 := v1 ; assign v0 = 0 ; assign v1 = 1 }
}
)fol";

const char* indep_eqtrans = R"fol(
cert indep-EQtrans {
  validate: mp , minimp , peirce , contrap , notelim , gen , ALLdistr , spec ,
            modal5 , vacGen , ALLcomm , EQrefl , EQsymm , denot , genEq ;
  falsify: EQtrans ;
  model fo { size 3 ; eq { 0 0 ; 0 1 ; 1 0 ; 1 1 ; 1 2 ; 2 1 ; 2 2 } } ;
  support 1 ;
  witness { x0 := v0 ; x1 := v1 ; x2 := v2 ; assign v0 = 0 ; assign v1 = 1 ; assign v2 = 2 }
}
)fol";

const char* indep_denot = R"fol(
cert indep-denot {
  validate: mp , minimp , peirce , contrap , notelim , gen , ALLdistr , spec ,
            modal5 , vacGen , ALLcomm , EQrefl , EQsymm , EQtrans , subst ,
            ALLeq , genEq ;
  falsify: denot ;
  model tt {
    values 2 ;
    imp [ 1 1
          0 1 ] ;
    neg [ 1 0 ] ;
    designated { 1 } ;
    eq indexed 1 0 ;
    quant ignore ;
  } ;
}
)fol";

const char* indep_subst = R"fol(
# Monk's model: three objects, equality the equivalence with classes {0,1}
# and {2}, P true exactly at 0. Works even alongside oneObj and gen-P.
language { P 1 }

cert indep-subst {
  validate: mp , minimp , peirce , contrap , notelim , gen , ALLdistr , spec ,
            modal5 , vacGen , ALLcomm , EQrefl , EQsymm , EQtrans , denot ,
            ALLeq , genEq , oneObj , gen-P ;
  falsify: subst ;
  model fo { size 3 ; eq { 0 0 ; 0 1 ; 1 0 ; 1 1 ; 2 2 } ; pred P { 0 } } ;
  support 0 ;
  witness { f0 := P v0 ; x0 := v0 ; x1 := v1 ; assign v1 = 1 }
}
)fol";

const char* indep_pred = R"fol(
language { P 1 in 2 }

cert indep-ax-P1 {
  validate: mp , minimp , peirce , contrap , notelim , gen , ALLdistr , spec ,
            modal5 , vacGen , ALLcomm , EQrefl , EQsymm , EQtrans , denot ,
            genEq , ax-in1 , ax-in2 ;
  falsify: ax-P1 ;
  model fo { size 2 ; eq total ; pred P { 0 } } ;
  support 1 ;
  witness { x0 := v0 ; x1 := v1 ; assign v0 = 0 ; assign v1 = 1 }
}

cert indep-ax-in1 {
  validate: mp , minimp , peirce , contrap , notelim , gen , ALLdistr , spec ,
            modal5 , vacGen , ALLcomm , EQrefl , EQsymm , EQtrans , denot ,
            genEq , ax-P1 , ax-in2 ;
  falsify: ax-in1 ;
  model fo { size 2 ; eq total ; pred in { 0 0 ; 0 1 } } ;
  support 1 ;
  witness { x0 := v0 ; x1 := v1 ; x2 := v2 ; assign v0 = 0 ; assign v1 = 1 ; assign v2 = 0 }
}

cert indep-ax-in2 {
  validate: mp , minimp , peirce , contrap , notelim , gen , ALLdistr , spec ,
            modal5 , vacGen , ALLcomm , EQrefl , EQsymm , EQtrans , denot ,
            genEq , ax-P1 , ax-in1 ;
  falsify: ax-in2 ;
  model fo { size 2 ; eq total ; pred in { 0 0 ; 1 0 } } ;
  support 1 ;
  witness { x0 := v0 ; x1 := v1 ; x2 := v2 ; assign v0 = 0 ; assign v1 = 1 ; assign v2 = 0 }
}
)fol";

const char* supertruth = R"fol(
# The ALLcomm counterexample and the two semisupertruth refutations.
supercert not-supertrue-ALLcomm {
  target: ALLcomm ;
  instance ( f0 := x2 = x3 ) ;
  transform 0 1 ;
  then ( x2 := x1 ) ;
  refute eq-decide ;
}

supercert not-semisupertrue-spec {
  target: { concl: ( A. x0 x0 = x1 -> x0 = x1 ) } ;
  instance ( ) ;
  transform sym 0 1 ;
  refute eq-decide ;
}

supercert not-semisupertrue-ALLeq {
  target: ALLeq ;
  instance ( f0 := x2 = x3 ) ;
  transform sym 0 1 ;
  then ( x2 := x1 ) ;
  refute eq-decide ;
}
)fol";

const char* appendix_a = R"mm(
$c Term Nat 0 ' $.
$v n $.
on $f Term n $.
o0 $a Term 0 $.
os $a Term n ' $.
n0 $a Nat 0 $.
${ ns.1 $e Nat n $. ns $a Nat n ' $. $}
n1 $p Nat 0 ' $= o0 n0 ns $.
n2 $p Nat 0 ' ' $= o0 os n1 ns $.
nn $p Nat n $= ? $. $( not provable $)
)mm";

}  // namespace schemata::fixtures

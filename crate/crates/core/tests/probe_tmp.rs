use std::time::Instant;

use serreq::corpus::graded_module_corpus;
use serreq::field::FieldSpec;
use serreq::grpoly::PolyRing;
use serreq::qgr::canonical_defect;

#[test]
#[ignore]
fn probe_single() {
    let ring = PolyRing { field: FieldSpec::Fp(101), num_vars: 3 };
    let mods = graded_module_corpus(ring, 25, 7).unwrap();
    let m = &mods[3];
    let t = Instant::now();
    let d = canonical_defect(m);
    eprintln!("module 3: {:?} in {:?}", d, t.elapsed());
}
